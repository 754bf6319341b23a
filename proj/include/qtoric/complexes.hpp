#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qtoric {

using IndexSet = std::vector<std::size_t>;

/// Pure simplicial complex given by its facets. Indices are 0-based.
struct SimplicialComplex {
    std::size_t num_vertices = 0;
    /// Facets in input order; the listed vertex order seeds orientation.
    std::vector<IndexSet> facets;

    /// Throws ValidationError on empty input, out-of-range or repeated
    /// vertices, duplicate facets and (when require_pure) mixed facet sizes.
    void validate(bool require_pure = true) const;

    /// Facet cardinality minus one.
    std::size_t dimension() const;

    bool operator==(const SimplicialComplex&) const = default;
};

/**
 * Simple polytope described by vertex-facet incidences: each vertex is the
 * sorted set of the n facets that meet there.
 */
struct SimplePolytope {
    std::size_t dimension = 0;
    std::size_t num_facets = 0;
    std::vector<IndexSet> vertices;
    /// Pairs of vertex indices that share n-1 facets.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    void validate() const;
    /// Vertex index with exactly this facet set, or npos.
    std::size_t find_vertex(std::span<const std::size_t> facets) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const SimplePolytope&) const = default;
};

/// Builds a SimplePolytope from incidences, sorting each vertex and deriving edges.
SimplePolytope make_simple_polytope(std::size_t dimension, std::size_t num_facets,
                                    std::vector<IndexSet> vertices);

/**
 * Ordered tuple per vertex of a simple polytope (its facets) or per facet of
 * a simplicial sphere (its vertices). `reversed` records that the tuples
 * belong to the opposite of the orientation they were derived from.
 */
struct OrientationData {
    std::vector<IndexSet> tuples;
    bool reversed = false;

    OrientationData reversed_copy() const;

    bool operator==(const OrientationData&) const = default;
};

/// +1 if `tuple` is an even permutation of `reference`, -1 if odd; throws if
/// they are not permutations of each other.
int permutation_sign(std::span<const std::size_t> tuple, std::span<const std::size_t> reference);

/// f_0 .. f_d.
using FVector = std::vector<std::uint64_t>;

FVector f_vector(const SimplicialComplex& complex);

/// h_0 .. h_d from f_0 .. f_{d-1} for a (d-1)-dimensional complex.
std::vector<std::int64_t> h_vector(const FVector& f, std::size_t d);

/// Alternating sum f_0 - f_1 + f_2 - ...
std::int64_t euler_characteristic(const FVector& f);

struct RidgeDefect {
    IndexSet ridge;
    std::size_t count = 0;
};

struct PseudomanifoldReport {
    bool passed = false;
    std::vector<RidgeDefect> offending;
};

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& complex);

/// A propagation cycle whose two ends disagree across `ridge`.
struct NonOrientableCertificate {
    IndexSet ridge;
    std::size_t facet_a = 0;
    std::size_t facet_b = 0;
    /// Facets along the spanning-tree paths a -> root -> b.
    std::vector<std::size_t> cycle;
};

using OrientationResult = std::variant<OrientationData, NonOrientableCertificate>;

/**
 * Breadth-first orientation propagation from facet 0 (kept in its listed
 * order) across shared ridges. Throws ValidationError for a complex that is
 * not a connected pseudomanifold.
 */
OrientationResult coherent_orientation(const SimplicialComplex& complex);

/// True when every shared ridge receives opposite orientations from its two facets.
bool is_coherent(const SimplicialComplex& complex, const OrientationData& orientation);

/// How a computed orientation relates to a reference list of ordered tuples.
struct OrientationComparison {
    enum class Case { identical, global_reversal, inconsistent };
    Case relation = Case::inconsistent;
    /// Per reference tuple: +1 when it is an even permutation of the computed
    /// tuple on the same set, -1 when odd.
    std::vector<int> parities;
    std::size_t even = 0;
    std::size_t odd = 0;
};

/// Matches tuples by their underlying sets; throws ValidationError when a
/// reference tuple has no computed counterpart.
OrientationComparison compare_orientations(const OrientationData& computed,
                                           const OrientationData& reference);
std::string to_string(OrientationComparison::Case c);

/// Facets of the output are the vertices of `complex`, vertices are its facets.
SimplePolytope dualize(const SimplicialComplex& complex);

/// Boundary of conv(vertices) as a complex; helpers for fixtures and tests.
SimplicialComplex simplex_boundary(std::size_t dimension);
SimplicialComplex cross_polytope_boundary(std::size_t dimension);

/// 1-based label: "2137" when every index is below 10, "2,11,3" otherwise.
std::string tuple_label(std::span<const std::size_t> tuple);

}  // namespace qtoric
