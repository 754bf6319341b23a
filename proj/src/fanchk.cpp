#include "qtoric/fanchk.hpp"

#include "qtoric/errors.hpp"
#include "qtoric/lp.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace qtoric {

namespace {

IntVector primitive_part(const RationalVector& v) {
    BigInt lcm = 1;
    for (const auto& x : v) {
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
    }
    IntVector out;
    BigInt g = 0;
    for (const auto& x : v) {
        out.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
        g = boost::multiprecision::gcd(g, BigInt(abs(out.back())));
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace

ConeMembership cone_membership(const SimplicialCone& cone, const RationalVector& point) {
    if (!cone.generators.is_square()) throw DimensionError("cone generator matrix must be square");
    ConeMembership m;
    try {
        m.coefficients = solve_linear(to_rational(cone.generators), point);
    } catch (const SingularMatrixError& e) {
        throw DegeneracyError(std::string("cone generators are linearly dependent: ") + e.what());
    }
    m.inside = std::all_of(m.coefficients.begin(), m.coefficients.end(),
                           [](const BigRational& x) { return x >= 0; });
    m.interior = std::all_of(m.coefficients.begin(), m.coefficients.end(),
                             [](const BigRational& x) { return x > 0; });
    return m;
}

ConeOverlap cones_overlap_interior(const SimplicialCone& a, const SimplicialCone& b) {
    const std::size_t n = a.generators.rows();
    if (!a.generators.is_square() || b.generators.rows() != n || !b.generators.is_square()) {
        throw DimensionError("cones must be full-dimensional in the same space");
    }
    // Variables (x_1..x_n, y_1..y_n), all strictly positive: A x - B y = 0.
    std::vector<LinearEquality> eqs;
    for (std::size_t r = 0; r < n; ++r) {
        LinearEquality eq{RationalVector(2 * n), 0};
        for (std::size_t c = 0; c < n; ++c) {
            eq.coeffs[c] = BigRational(a.generators(r, c));
            eq.coeffs[n + c] = BigRational(-b.generators(r, c));
        }
        eqs.push_back(std::move(eq));
    }
    std::vector<std::size_t> all(2 * n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto lp = strict_feasibility(eqs, 2 * n, all);
    ConeOverlap result;
    result.overlap = lp.feasible;
    if (lp.feasible) {
        RationalVector x(lp.witness.begin(), lp.witness.begin() + static_cast<std::ptrdiff_t>(n));
        result.witness = primitive_part(to_rational(a.generators) * x);
    }
    return result;
}

FanReport fan_properness(const std::vector<SimplicialCone>& cones, unsigned jobs) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (abs(det_int(cones[i].generators)) != 1) {
            throw UnimodularityError("cone " + std::to_string(i + 1) + " is not unimodular");
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<ConePairDefect>> verdicts(pairs.size());
    auto examine = [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        const SimplicialCone& a = cones[i];
        const SimplicialCone& b = cones[j];
        if (!a.rays.empty() && !b.rays.empty()) {
            std::size_t shared = 0;
            bool mismatch = false;
            for (std::size_t ca = 0; ca < a.rays.size(); ++ca) {
                const auto it = std::find(b.rays.begin(), b.rays.end(), a.rays[ca]);
                if (it == b.rays.end()) continue;
                ++shared;
                const auto cb = static_cast<std::size_t>(it - b.rays.begin());
                if (a.generators.column(ca) != b.generators.column(cb)) mismatch = true;
            }
            if (mismatch && shared + 1 == a.rays.size()) {
                verdicts[p] = ConePairDefect{i, j, {}, true};
                return;
            }
        }
        auto overlap = cones_overlap_interior(a, b);
        if (overlap.overlap) verdicts[p] = ConePairDefect{i, j, std::move(overlap.witness), false};
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
    if (workers <= 1) {
        for (std::size_t p = 0; p < pairs.size(); ++p) examine(p);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t p = next++; p < pairs.size(); p = next++) examine(p);
            });
        }
        for (auto& t : pool) t.join();
    }

    FanReport report;
    report.pairs_tested = pairs.size();
    for (auto& v : verdicts)
        if (v) report.offending.push_back(std::move(*v));
    report.proper = report.offending.empty();
    return report;
}

std::vector<SimplicialCone> cones_from(const SimplePolytope& polytope, const CharacteristicMap& map) {
    require_compatible(polytope, map);
    std::vector<SimplicialCone> cones;
    for (const auto& v : polytope.vertices) cones.push_back({map.minor(v), v});
    return cones;
}

CoverageSample sample_coverage(const std::vector<SimplicialCone>& cones, std::size_t samples,
                               unsigned seed) {
    CoverageSample out;
    if (cones.empty()) return out;
    const std::size_t n = cones.front().generators.rows();
    std::mt19937 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        RationalVector direction(n);
        bool zero = true;
        for (auto& x : direction) {
            // Raw engine output keeps the sample sequence identical across platforms.
            x = static_cast<long>(rng() % 201) - 100;
            zero = zero && x == 0;
        }
        if (zero) continue;
        ++out.samples;
        std::size_t hits = 0;
        for (const auto& c : cones)
            if (cone_membership(c, direction).inside) ++hits;
        if (hits == 0) ++out.uncovered;
        else if (hits == 1) ++out.covered_once;
        else ++out.covered_multiply;
    }
    return out;
}

}  // namespace qtoric
