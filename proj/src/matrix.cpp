#include "qtoric/matrix.hpp"

namespace qtoric {

BigInt det_int(const IntMatrix& input) {
    if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    BigInt previous = 1;
    int parity = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            m.swap_rows(pivot, k);
            parity = -parity;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Sylvester's identity keeps this division exact.
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return parity * m(n - 1, n - 1);
}

namespace {

BigInt cofactor_expand(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = cols.size();
    if (n == 0) return 1;
    BigInt total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const BigInt& entry = m(row, cols[k]);
        if (entry == 0) continue;
        const std::size_t removed = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        BigInt minor = cofactor_expand(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), removed);
        total += (k % 2 == 0 ? 1 : -1) * entry * minor;
    }
    return total;
}

}  // namespace

BigInt det_cofactor(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return cofactor_expand(m, cols, 0);
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = BigRational(m(i, j));
    return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const BigInt det = det_int(m);
    if (abs(det) != 1) {
        throw UnimodularityError("matrix is not unimodular (det " + det.str() + ")");
    }
    const std::size_t n = m.rows();
    const RationalMatrix a = to_rational(m);
    IntMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<BigRational> unit(n, BigRational(0));
        unit[c] = 1;
        const auto column = solve_linear(a, unit);
        for (std::size_t r = 0; r < n; ++r) {
            // Cramer: entries are cofactors divided by +-1, hence integral.
            inv(r, c) = boost::multiprecision::numerator(column[r]);
        }
    }
    return inv;
}

}  // namespace qtoric
