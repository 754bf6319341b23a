#pragma once

#include "qtoric/charmap.hpp"
#include "qtoric/complexes.hpp"
#include "qtoric/matrix.hpp"

#include <optional>
#include <vector>

namespace qtoric {

using RationalVector = std::vector<BigRational>;

/// Full-dimensional simplicial cone; columns of `generators` span it.
struct SimplicialCone {
    IntMatrix generators;
    /// Optional ray labels (facet or sphere-vertex indices), one per column.
    IndexSet rays;
};

struct ConeMembership {
    bool inside = false;
    bool interior = false;
    /// x with G x = p.
    RationalVector coefficients;
};

/// Throws DegeneracyError when the generators are linearly dependent.
ConeMembership cone_membership(const SimplicialCone& cone, const RationalVector& point);

struct ConeOverlap {
    bool overlap = false;
    /// A x with x > 0 and A x = B y, y > 0 (integral, primitive) when overlap is true.
    IntVector witness;
};

/// Is there a ray interior to both cones?  A x = B y with x, y > 0.
ConeOverlap cones_overlap_interior(const SimplicialCone& a, const SimplicialCone& b);

struct ConePairDefect {
    std::size_t first = 0;
    std::size_t second = 0;
    /// Interior overlap witness, or empty when the defect is a ridge mismatch.
    IntVector witness;
    bool ridge_mismatch = false;
};

struct FanReport {
    bool proper = false;
    std::size_t pairs_tested = 0;
    std::vector<ConePairDefect> offending;
};

/**
 * Pairwise properness: no two cones share interior points. Cones that share
 * n-1 ray labels must additionally use identical generators for those rays.
 * Pairs run on up to `jobs` threads; results are collected in pair order.
 */
FanReport fan_properness(const std::vector<SimplicialCone>& cones, unsigned jobs = 1);

/// One cone per vertex, generated by the lambda vectors of its facets.
std::vector<SimplicialCone> cones_from(const SimplePolytope& polytope, const CharacteristicMap& map);

/// Heuristic completeness diagnostic: how many sampled integer directions are
/// covered by zero, one, or several cones. Not a proof of anything.
struct CoverageSample {
    std::size_t samples = 0;
    std::size_t uncovered = 0;
    std::size_t covered_once = 0;
    std::size_t covered_multiply = 0;
};

CoverageSample sample_coverage(const std::vector<SimplicialCone>& cones, std::size_t samples,
                               unsigned seed = 1);

}  // namespace qtoric
