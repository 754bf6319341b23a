#include "qtoric/charmap.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>

namespace qtoric {

bool is_primitive(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, BigInt(abs(x)));
    return g == 1;
}

CharacteristicMap::CharacteristicMap(std::size_t rank, std::vector<IntVector> vectors)
    : rank_(rank), vectors_(std::move(vectors)) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].size() != rank_) {
            throw CoverageError("vector of facet " + std::to_string(i + 1) + " has " +
                                std::to_string(vectors_[i].size()) + " entries, expected " +
                                std::to_string(rank_));
        }
        if (!is_primitive(vectors_[i])) {
            throw CoverageError("vector of facet " + std::to_string(i + 1) + " is not primitive");
        }
    }
}

IntMatrix CharacteristicMap::minor(std::span<const std::size_t> tuple) const {
    IntMatrix m(rank_, tuple.size());
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        const IntVector& col = vectors_.at(tuple[k]);
        for (std::size_t r = 0; r < rank_; ++r) m(r, k) = col[r];
    }
    return m;
}

CharacteristicMap CharacteristicMap::transformed(const IntMatrix& g) const {
    if (g.rows() != rank_ || g.cols() != rank_) {
        throw DimensionError("transform must be " + std::to_string(rank_) + "x" + std::to_string(rank_));
    }
    std::vector<IntVector> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) out.push_back(g * v);
    return CharacteristicMap(rank_, std::move(out));
}

void require_compatible(const SimplePolytope& polytope, const CharacteristicMap& map) {
    if (map.size() != polytope.num_facets) {
        throw CoverageError("characteristic map assigns " + std::to_string(map.size()) +
                            " vectors but there are " + std::to_string(polytope.num_facets) +
                            " facets");
    }
    if (map.rank() != polytope.dimension) {
        throw CoverageError("characteristic map has rank " + std::to_string(map.rank()) +
                            " on a polytope of dimension " + std::to_string(polytope.dimension));
    }
}

void require_compatible(const SimplePolytope& polytope, const OrientationData& orientation) {
    if (orientation.tuples.size() != polytope.vertices.size()) {
        throw ValidationError("orientation has " + std::to_string(orientation.tuples.size()) +
                              " tuples for " + std::to_string(polytope.vertices.size()) +
                              " vertices");
    }
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
        IndexSet s = orientation.tuples[v];
        std::sort(s.begin(), s.end());
        if (s != polytope.vertices[v]) {
            throw ValidationError("tuple " + tuple_label(orientation.tuples[v]) +
                                  " does not order vertex " + tuple_label(polytope.vertices[v]));
        }
    }
}

UnimodularityReport unimodularity_check(const SimplePolytope& polytope, const CharacteristicMap& map) {
    require_compatible(polytope, map);
    UnimodularityReport report;
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
        BigInt det = det_int(map.minor(polytope.vertices[v]));
        if (abs(det) != 1) report.offending.push_back({v, det});
        report.determinants.push_back(std::move(det));
    }
    report.passed = report.offending.empty();
    return report;
}

int vertex_sign(const CharacteristicMap& map, std::span<const std::size_t> ordered_tuple) {
    const BigInt det = det_int(map.minor(ordered_tuple));
    if (abs(det) != 1) {
        throw UnimodularityError("det at vertex " + tuple_label(ordered_tuple) + " is " + det.str());
    }
    return det.sign();
}

SignPattern sign_pattern(const SimplePolytope& polytope, const CharacteristicMap& map,
                         const OrientationData& orientation) {
    require_compatible(polytope, map);
    require_compatible(polytope, orientation);
    SignPattern signs(polytope.vertices.size(), 0);
    std::string failures;
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
        const BigInt det = det_int(map.minor(orientation.tuples[v]));
        if (abs(det) != 1) {
            failures += (failures.empty() ? "" : ", ") + tuple_label(orientation.tuples[v]) +
                        " (det " + det.str() + ")";
            continue;
        }
        signs[v] = det.sign();
    }
    if (!failures.empty()) throw UnimodularityError("not unimodular at " + failures);
    return signs;
}

AlmostComplexReport almost_complex_check(const SimplePolytope& polytope,
                                         const CharacteristicMap& map,
                                         const OrientationData& orientation) {
    AlmostComplexReport report;
    report.signs = sign_pattern(polytope, map, orientation);
    for (std::size_t v = 0; v < report.signs.size(); ++v)
        if (report.signs[v] != 1) report.offending.push_back(v);
    report.almost_complex = report.offending.empty();
    return report;
}

Gf2System flip_system(const SimplePolytope& polytope, const CharacteristicMap& map,
                      const OrientationData& orientation) {
    const SignPattern signs = sign_pattern(polytope, map, orientation);
    Gf2System system;
    system.num_vars = polytope.num_facets;
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
        system.equations.push_back({polytope.vertices[v], signs[v] == -1});
    }
    return system;
}

CharacteristicMap apply_flip(const CharacteristicMap& map, const FlipVector& flip) {
    if (flip.size() != map.size()) {
        throw DimensionError("flip has " + std::to_string(flip.size()) + " entries for " +
                             std::to_string(map.size()) + " facets");
    }
    std::vector<IntVector> out = map.vectors();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (flip[i] != 1 && flip[i] != -1) throw ValidationError("flip entries must be +1 or -1");
        if (flip[i] == -1)
            for (auto& x : out[i]) x = -x;
    }
    return CharacteristicMap(map.rank(), std::move(out));
}

SignPattern predicted_signs(const SimplePolytope& polytope, const SignPattern& signs,
                            const FlipVector& flip) {
    SignPattern out = signs;
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v)
        for (std::size_t f : polytope.vertices[v]) out[v] *= flip.at(f);
    return out;
}

FlipVector flip_from_bits(const std::vector<bool>& bits) {
    FlipVector flip(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) flip[i] = bits[i] ? -1 : 1;
    return flip;
}

}  // namespace qtoric
