#pragma once

#include "qtoric/errors.hpp"
#include "qtoric/number.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtoric {

/// Small dense row-major matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    /// Builds the matrix whose j-th column is columns[j].
    static DenseMatrix from_columns(std::span<const std::vector<T>> columns) {
        const std::size_t cols = columns.size();
        const std::size_t rows = cols == 0 ? 0 : columns.front().size();
        DenseMatrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (columns[j].size() != rows) throw DimensionError("columns of unequal length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<BigRational>;
using Sqrt2Matrix = DenseMatrix<Sqrt2Number>;

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    DenseMatrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

template <typename T>
std::vector<T> operator*(const DenseMatrix<T>& a, std::span<const T> x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
    return out;
}

template <typename T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& x) {
    return a * std::span<const T>(x);
}

/// Fraction-free (Bareiss) determinant; throws DimensionError on non-square input.
BigInt det_int(const IntMatrix& m);

/// Laplace expansion along the first row. Exponential; intended for n <= 5.
BigInt det_cofactor(const IntMatrix& m);

/// Determinant over a field by Gaussian elimination with exact division.
template <typename T>
T det_field(DenseMatrix<T> m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == T(0)) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != k) {
            m.swap_rows(pivot, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == T(0)) continue;
            const T factor = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

/// Rank by exact row reduction.
template <typename T>
std::size_t rank(DenseMatrix<T> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == T(0)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == T(0)) continue;
            const T factor = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

/**
 * Solves a x = b exactly by Gaussian elimination (first nonzero pivot).
 *
 * Throws SingularMatrixError carrying the rank reached when a is not
 * invertible, and DimensionError when the shapes disagree.
 */
template <typename T>
std::vector<T> solve_linear(DenseMatrix<T> a, std::vector<T> b) {
    if (!a.is_square()) throw DimensionError("solve_linear needs a square matrix");
    if (b.size() != a.rows()) throw DimensionError("right-hand side length mismatch");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == T(0)) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError(rank(a), "singular matrix (rank " + std::to_string(rank(a)) +
                                                   " of " + std::to_string(n) + ")");
        }
        if (pivot != k) {
            a.swap_rows(pivot, k);
            std::swap(b[pivot], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == T(0)) continue;
            const T factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<T> x(n, T(0));
    for (std::size_t k = n; k-- > 0;) {
        T acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc / a(k, k);
    }
    return x;
}

/// Integer inverse of a unimodular matrix (|det| = 1); throws UnimodularityError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace qtoric
