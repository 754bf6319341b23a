#include "qtoric/cyclic.hpp"

#include "qtoric/errors.hpp"
#include "qtoric/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qtoric {

namespace {

/// cos and sin of k*pi/4.
std::pair<Sqrt2Number, Sqrt2Number> eighth_turn(int k) {
    const Sqrt2Number h(0, BigRational(1, 2));  // sqrt2 / 2
    switch (((k % 8) + 8) % 8) {
        case 0: return {1, 0};
        case 1: return {h, h};
        case 2: return {0, 1};
        case 3: return {-h, h};
        case 4: return {-1, 0};
        case 5: return {-h, -h};
        case 6: return {0, -1};
        default: return {h, -h};
    }
}

Sqrt2Number dot(const Sqrt2Vector& a, const Sqrt2Vector& b) {
    Sqrt2Number acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& fn) {
    if (k > n) return;
    IndexSet subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
        fn(subset);
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace

AngleSpec AngleSpec::from_multiples_of_pi(const std::vector<BigRational>& angles) {
    std::vector<int> eighths;
    for (const auto& a : angles) {
        const BigRational quarters = a * 4;
        if (boost::multiprecision::denominator(quarters) != 1) {
            throw FieldCoverageError("angle " + to_string(a) +
                                     "*pi is not a multiple of pi/4; its cosine leaves Q(sqrt2)");
        }
        const BigInt k = boost::multiprecision::numerator(quarters);
        if (k < 0 || k >= 8) {
            throw ValidationError("angle " + to_string(a) + "*pi lies outside [0, 2pi)");
        }
        eighths.push_back(k.convert_to<int>());
    }
    return from_eighth_turns(std::move(eighths));
}

AngleSpec AngleSpec::from_eighth_turns(std::vector<int> eighths) {
    for (std::size_t i = 0; i < eighths.size(); ++i) {
        if (eighths[i] < 0 || eighths[i] >= 8) {
            throw ValidationError("angle index " + std::to_string(eighths[i]) +
                                  " outside 0..7 (multiples of pi/4 in [0, 2pi))");
        }
        if (i > 0 && eighths[i] <= eighths[i - 1]) {
            throw ValidationError("angles must be strictly increasing");
        }
    }
    AngleSpec spec;
    spec.eighths_ = std::move(eighths);
    return spec;
}

std::vector<BigRational> AngleSpec::multiples_of_pi() const {
    std::vector<BigRational> out;
    for (int k : eighths_) out.emplace_back(k, 4);
    return out;
}

void PointConfiguration::validate() const {
    if (dimension == 0) throw ValidationError("point configuration of dimension 0");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dimension) {
            throw DimensionError("point " + std::to_string(i + 1) + " has " +
                                 std::to_string(points[i].size()) + " coordinates, expected " +
                                 std::to_string(dimension));
        }
    }
}

Sqrt2Vector caratheodory_point(int eighths) {
    const auto [c1, s1] = eighth_turn(eighths);
    const auto [c2, s2] = eighth_turn(2 * eighths);
    return {c1, s1, c2, s2};
}

Sqrt2Vector caratheodory_point(const BigRational& multiple_of_pi) {
    const BigRational quarters = multiple_of_pi * 4;
    if (boost::multiprecision::denominator(quarters) != 1) {
        throw FieldCoverageError("angle " + to_string(multiple_of_pi) +
                                 "*pi is not a multiple of pi/4");
    }
    const BigInt k = boost::multiprecision::numerator(quarters) % 8;
    return caratheodory_point(k.convert_to<int>());
}

CaratheodoryRealization caratheodory_realization(const AngleSpec& angles) {
    CaratheodoryRealization r{angles, {4, {}}};
    for (int k : angles.eighth_turns()) r.config.points.push_back(caratheodory_point(k));
    return r;
}

bool satisfies_gale_evenness(std::span<const std::size_t> subset, std::size_t n) {
    std::vector<bool> chosen(n, false);
    for (std::size_t i : subset) chosen.at(i) = true;
    // Between two consecutive omitted indices the run of chosen ones must be even.
    std::size_t run = 0;
    bool seen_gap = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i]) {
            ++run;
            continue;
        }
        if (seen_gap && run % 2 == 1) return false;
        seen_gap = true;
        run = 0;
    }
    return true;
}

std::vector<IndexSet> gale_facets(std::size_t n, std::size_t d) {
    if (n <= d) {
        throw DegeneracyError("cyclic polytope needs more than " + std::to_string(d) +
                              " vertices, got " + std::to_string(n));
    }
    std::vector<IndexSet> out;
    for_each_subset(n, d, [&](const IndexSet& s) {
        if (satisfies_gale_evenness(s, n)) out.push_back(s);
    });
    return out;
}

Hyperplane hyperplane_through(const PointConfiguration& config, std::span<const std::size_t> subset) {
    const std::size_t d = config.dimension;
    if (subset.size() != d) {
        throw DimensionError("a hyperplane in dimension " + std::to_string(d) + " needs " +
                             std::to_string(d) + " points, got " + std::to_string(subset.size()));
    }
    const Sqrt2Vector& base = config.points.at(subset[0]);
    Sqrt2Matrix diffs(d - 1, d);
    for (std::size_t r = 1; r < d; ++r) {
        const Sqrt2Vector& p = config.points.at(subset[r]);
        for (std::size_t c = 0; c < d; ++c) diffs(r - 1, c) = p[c] - base[c];
    }
    Hyperplane h;
    h.normal.resize(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
        Sqrt2Matrix minor(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r)
            for (std::size_t c = 0, mc = 0; c < d; ++c)
                if (c != j) minor(r, mc++) = diffs(r, c);
        h.normal[j] = det_field(minor);
        if (j % 2 == 1) h.normal[j] = -h.normal[j];
        nonzero = nonzero || !h.normal[j].is_zero();
    }
    if (!nonzero) {
        throw DegeneracyError("points " + tuple_label(subset) + " are affinely dependent");
    }
    h.offset = dot(h.normal, base);
    return h;
}

bool verify_facets_geometric(const PointConfiguration& config, std::span<const std::size_t> candidate) {
    config.validate();
    const Hyperplane h = hyperplane_through(config, candidate);
    int side = 0;
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        if (std::find(candidate.begin(), candidate.end(), i) != candidate.end()) continue;
        const int s = sign(dot(h.normal, config.points[i]) - h.offset);
        if (s == 0) return false;
        if (side == 0) side = s;
        if (s != side) return false;
    }
    return true;
}

std::vector<IndexSet> geometric_facets(const PointConfiguration& config) {
    config.validate();
    std::vector<IndexSet> out;
    for_each_subset(config.points.size(), config.dimension, [&](const IndexSet& s) {
        try {
            if (verify_facets_geometric(config, s)) out.push_back(s);
        } catch (const DegeneracyError&) {
        }
    });
    return out;
}

OriginInteriorResult contains_origin_interior(const PointConfiguration& config) {
    config.validate();
    const std::size_t d = config.dimension;
    const std::size_t n = config.points.size();
    if (n == 0) throw DegeneracyError("empty point configuration");
    // Linear rank: a hull lying in an affine hyperplane that misses the origin
    // is a plain "no"; only a hull inside a proper linear subspace is degenerate.
    Sqrt2Matrix rows(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < d; ++c) rows(i, c) = config.points[i][c];
    const std::size_t r = rank(rows);
    if (r < d) {
        throw DegeneracyError("points span a linear subspace of dimension " + std::to_string(r) +
                              " in R^" + std::to_string(d));
    }
    // sum_i w_i p_i = 0 with every w_i > 0; the weights range over Q(sqrt2).
    std::vector<BasicLinearEquality<Sqrt2Number>> eqs;
    for (std::size_t c = 0; c < d; ++c) {
        BasicLinearEquality<Sqrt2Number> eq{Sqrt2Vector(n), 0};
        for (std::size_t i = 0; i < n; ++i) eq.coeffs[i] = config.points[i][c];
        eqs.push_back(std::move(eq));
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    const auto lp = strict_feasibility(eqs, n, all);
    OriginInteriorResult result;
    result.interior = lp.feasible;
    if (lp.feasible) {
        Sqrt2Number total;
        for (const auto& w : lp.witness) total += w;
        for (const auto& w : lp.witness) result.weights.push_back(w / total);
    }
    return result;
}

PolarPolytope build_polar(const PointConfiguration& config, const std::optional<AngleSpec>& angles) {
    if (!contains_origin_interior(config).interior) {
        throw PolarityError("origin is not interior to the convex hull; the polar is unbounded");
    }
    const std::size_t d = config.dimension;
    const auto facets = geometric_facets(config);
    if (angles) {
        const auto gale = gale_facets(config.points.size(), d);
        if (gale != facets) {
            throw RealizationInconsistencyError(
                "geometric facets (" + std::to_string(facets.size()) +
                ") disagree with Gale's evenness condition (" + std::to_string(gale.size()) + ")");
        }
    }

    PolarPolytope polar;
    polar.facet_functionals = config.points;
    for (const auto& s : facets) {
        Sqrt2Matrix rows(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) rows(r, c) = config.points[s[r]][c];
        Sqrt2Vector u = solve_linear(rows, Sqrt2Vector(d, Sqrt2Number(1)));
        for (std::size_t i = 0; i < config.points.size(); ++i) {
            if (std::binary_search(s.begin(), s.end(), i)) continue;
            if (sign(dot(u, config.points[i]) - Sqrt2Number(1)) >= 0) {
                throw DegeneracyError("point " + std::to_string(i + 1) + " lies on facet " +
                                      tuple_label(s) + "; the hull is not simplicial");
            }
        }
        polar.vertex_coords.push_back(std::move(u));
    }
    SimplicialComplex boundary{config.points.size(), facets};
    polar.combinatorics = dualize(boundary);
    return polar;
}

PolarPolytope build_polar(const CaratheodoryRealization& realization) {
    return build_polar(realization.config, realization.angles);
}

Sqrt2Number edge_determinant(const PolarPolytope& polar, std::span<const std::size_t> tuple) {
    const SimplePolytope& p = polar.combinatorics;
    const std::size_t n = p.dimension;
    const std::size_t v = p.find_vertex(tuple);
    if (v == SimplePolytope::npos) {
        throw IncidenceError("no vertex with facets " + tuple_label(tuple));
    }
    Sqrt2Matrix edges(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t neighbor = SimplePolytope::npos;
        for (const auto& [a, b] : p.edges) {
            if (a != v && b != v) continue;
            const std::size_t other = a == v ? b : a;
            const auto& fs = p.vertices[other];
            // The edge E_k keeps every facet but the k-th.
            if (!std::binary_search(fs.begin(), fs.end(), tuple[k])) {
                neighbor = other;
                break;
            }
        }
        if (neighbor == SimplePolytope::npos) {
            throw IncidenceError("vertex " + tuple_label(tuple) + " has no edge leaving facet " +
                                 std::to_string(tuple[k] + 1));
        }
        for (std::size_t r = 0; r < n; ++r) {
            edges(r, k) = polar.vertex_coords[neighbor][r] - polar.vertex_coords[v][r];
        }
    }
    return det_field(edges);
}

OrientationData vertex_orientation_tuples(const PolarPolytope& polar, bool reverse_ambient) {
    OrientationData out;
    out.reversed = reverse_ambient;
    for (const auto& facets : polar.combinatorics.vertices) {
        IndexSet tuple = facets;
        int s = sign(edge_determinant(polar, tuple));
        if (s == 0) {
            throw DegeneracyError("edge vectors at vertex " + tuple_label(tuple) + " are dependent");
        }
        if (reverse_ambient) s = -s;
        if (s < 0) std::swap(tuple[0], tuple[1]);
        out.tuples.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace qtoric
