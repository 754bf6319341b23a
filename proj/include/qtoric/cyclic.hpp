#pragma once

#include "qtoric/complexes.hpp"
#include "qtoric/lp.hpp"
#include "qtoric/number.hpp"

#include <optional>
#include <vector>

namespace qtoric {

using Sqrt2Vector = std::vector<Sqrt2Number>;

/// Strictly increasing angles in [0, 2pi), each stored as a multiple k of pi/4.
class AngleSpec {
public:
    /// Takes angles as rational multiples of pi; throws FieldCoverageError
    /// for anything that is not a multiple of 1/4, ValidationError when not
    /// strictly increasing inside [0, 2).
    static AngleSpec from_multiples_of_pi(const std::vector<BigRational>& angles);
    static AngleSpec from_eighth_turns(std::vector<int> eighths);

    const std::vector<int>& eighth_turns() const noexcept { return eighths_; }
    std::vector<BigRational> multiples_of_pi() const;
    std::size_t size() const noexcept { return eighths_.size(); }

    bool operator==(const AngleSpec&) const = default;

private:
    std::vector<int> eighths_;
};

/// Point set in Q(sqrt2)^d.
struct PointConfiguration {
    std::size_t dimension = 0;
    std::vector<Sqrt2Vector> points;

    void validate() const;

    bool operator==(const PointConfiguration&) const = default;
};

struct CaratheodoryRealization {
    AngleSpec angles;
    PointConfiguration config;
};

/// (cos u, sin u, cos 2u, sin 2u) for u = eighths * pi/4, exactly.
Sqrt2Vector caratheodory_point(int eighths);
/// Same, for u = angle * pi; FieldCoverageError unless 4*angle is an integer.
Sqrt2Vector caratheodory_point(const BigRational& multiple_of_pi);

CaratheodoryRealization caratheodory_realization(const AngleSpec& angles);

/// Gale's evenness condition: d-subsets of {0..n-1} in lexicographic order.
/// Throws DegeneracyError when n <= d.
std::vector<IndexSet> gale_facets(std::size_t n, std::size_t d);
bool satisfies_gale_evenness(std::span<const std::size_t> subset, std::size_t n);

/// Affine hyperplane normal . x = offset through d points, via signed minors.
struct Hyperplane {
    Sqrt2Vector normal;
    Sqrt2Number offset;
};

/// Throws DegeneracyError if the points are affinely dependent.
Hyperplane hyperplane_through(const PointConfiguration& config, std::span<const std::size_t> subset);

/// True when every point outside `candidate` lies strictly on one side of the
/// hyperplane through the candidate points.
bool verify_facets_geometric(const PointConfiguration& config, std::span<const std::size_t> candidate);

/// All d-subsets that pass verify_facets_geometric (affinely dependent ones skipped).
std::vector<IndexSet> geometric_facets(const PointConfiguration& config);

struct OriginInteriorResult {
    bool interior = false;
    /// Positive weights w with sum_i w_i p_i = 0 and sum w_i = 1 when interior.
    std::vector<Sqrt2Number> weights;
};

/// Throws DegeneracyError when the points do not linearly span the ambient space.
OriginInteriorResult contains_origin_interior(const PointConfiguration& config);

/**
 * Polar of a simplicial polytope containing the origin in its interior.
 * Facet i of the polar is {y : <y, p_i> <= 1}; vertex j is the solution of
 * <u, p_i> = 1 for every i in primal_facets[j].
 */
struct PolarPolytope {
    SimplePolytope combinatorics;
    std::vector<Sqrt2Vector> vertex_coords;
    /// facet_functionals[i] = p_i.
    std::vector<Sqrt2Vector> facet_functionals;
};

/// When `angles` is given the geometric facet list must equal gale_facets.
PolarPolytope build_polar(const PointConfiguration& config,
                          const std::optional<AngleSpec>& angles = std::nullopt);
PolarPolytope build_polar(const CaratheodoryRealization& realization);

/**
 * Positively ordered facet tuple at every vertex of the polar polytope.
 *
 * At v = F_{i_1} ∩ ... ∩ F_{i_n} the k-th edge vector runs from v to the
 * neighbor reached by dropping F_{i_k}. The sorted facet tuple is kept when
 * det(e_1..e_n) > 0 and its first two entries swapped otherwise. With
 * reverse_ambient the standard orientation of R^n is replaced by its opposite.
 */
OrientationData vertex_orientation_tuples(const PolarPolytope& polar, bool reverse_ambient = false);

/// Exact det(e_1, ..., e_n) for the tuple as ordered.
Sqrt2Number edge_determinant(const PolarPolytope& polar, std::span<const std::size_t> tuple);

}  // namespace qtoric
