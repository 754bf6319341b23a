#pragma once

#include "qtoric/complexes.hpp"
#include "qtoric/gf2.hpp"
#include "qtoric/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtoric {

using IntVector = std::vector<BigInt>;

/// Primitive integer vector in Z^n for every facet (or sphere vertex).
class CharacteristicMap {
public:
    CharacteristicMap() = default;
    /// Throws CoverageError for a vector of the wrong length, the zero vector
    /// or a non-primitive vector (gcd of entries != 1).
    CharacteristicMap(std::size_t rank, std::vector<IntVector> vectors);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    const IntVector& operator[](std::size_t facet) const { return vectors_.at(facet); }
    const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

    /// n x n matrix whose k-th column is the vector of tuple[k].
    IntMatrix minor(std::span<const std::size_t> tuple) const;

    /// Applies g to every vector; g must be unimodular.
    CharacteristicMap transformed(const IntMatrix& g) const;

    friend bool operator==(const CharacteristicMap&, const CharacteristicMap&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<IntVector> vectors_;
};

bool is_primitive(const IntVector& v);

/// Per-vertex entry of sigma.
using SignPattern = std::vector<int>;
/// x_i = -1 replaces lambda_i by -lambda_i.
using FlipVector = std::vector<int>;

struct VertexDeterminant {
    std::size_t vertex = 0;
    BigInt det;
};

struct UnimodularityReport {
    bool passed = false;
    /// det of the sorted-column minor at every vertex.
    std::vector<BigInt> determinants;
    std::vector<VertexDeterminant> offending;
};

/// Throws CoverageError when the map does not match the polytope's facets or rank.
void require_compatible(const SimplePolytope& polytope, const CharacteristicMap& map);
/// Throws ValidationError unless every tuple is an ordering of its vertex.
void require_compatible(const SimplePolytope& polytope, const OrientationData& orientation);

UnimodularityReport unimodularity_check(const SimplePolytope& polytope, const CharacteristicMap& map);

/// det of the minor in the given column order; UnimodularityError if |det| != 1.
int vertex_sign(const CharacteristicMap& map, std::span<const std::size_t> ordered_tuple);

/// sigma at every vertex; one UnimodularityError names all failing vertices.
SignPattern sign_pattern(const SimplePolytope& polytope, const CharacteristicMap& map,
                         const OrientationData& orientation);

struct AlmostComplexReport {
    bool almost_complex = false;
    SignPattern signs;
    std::vector<std::size_t> offending;
};

/// sigma(v) = +1 at every vertex.
AlmostComplexReport almost_complex_check(const SimplePolytope& polytope,
                                         const CharacteristicMap& map,
                                         const OrientationData& orientation);

/**
 * One equation per vertex: sum_{i in v} b_i = [sigma(v) = -1] over GF(2).
 * Negating column i of a minor negates its determinant, so flipping the
 * facets with b_i = 1 yields sigma'(v) = sigma(v) * prod_{i in v} x_i.
 */
Gf2System flip_system(const SimplePolytope& polytope, const CharacteristicMap& map,
                      const OrientationData& orientation);

CharacteristicMap apply_flip(const CharacteristicMap& map, const FlipVector& flip);

/// sigma(v) * prod_{i in v} x_i without recomputing determinants.
SignPattern predicted_signs(const SimplePolytope& polytope, const SignPattern& signs,
                            const FlipVector& flip);

FlipVector flip_from_bits(const std::vector<bool>& bits);

}  // namespace qtoric
