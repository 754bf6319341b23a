#pragma once

#include "qtoric/charmap.hpp"
#include "qtoric/complexes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtoric {

enum class SearchGoal {
    unimodular,    ///< |det| = 1 at every vertex
    all_positive,  ///< det = +1 in every positively ordered tuple
};

std::string to_string(SearchGoal goal);
SearchGoal parse_search_goal(const std::string& text);

struct SearchConfig {
    /// Every coordinate lies in [-bound, bound].
    int bound = 1;
    /// Ordered facet tuple of the vertex whose minor is fixed.
    IndexSet base_vertex;
    SearchGoal goal = SearchGoal::unimodular;
    /// Assignment order for the non-base facets; heuristic order when empty.
    std::optional<IndexSet> facet_order;
    /// 0 means unlimited.
    std::size_t solution_cap = 0;
    std::uint64_t node_budget = 1'000'000'000;
    unsigned jobs = 1;

    bool operator==(const SearchConfig&) const = default;
};

struct SearchResult {
    std::vector<CharacteristicMap> solutions;
    /// Candidate vectors tried, in depth-first order.
    std::uint64_t nodes = 0;
    /// True when the whole normalized bounded space was covered.
    bool exhaustive = false;
    bool budget_exhausted = false;
    bool cap_reached = false;
    /// Sign of the base tuple relative to the orientation (+1 positively ordered).
    int base_parity = 1;
    /// Facets in the order they were assigned (base facets first).
    IndexSet assignment_order;
    std::size_t candidates_per_facet = 0;
};

/**
 * Left-multiplies every vector by the inverse of the base minor taken in
 * the given column order, so those columns become e_1..e_n. Throws
 * NormalizationError when the base minor is not unimodular or the tuple is
 * not a vertex.
 */
CharacteristicMap normalize_map(const SimplePolytope& polytope, const CharacteristicMap& map,
                                std::span<const std::size_t> base_tuple,
                                const OrientationData& orientation);

/// Primitive vectors of [-bound, bound]^rank in lexicographic order.
std::vector<IntVector> bounded_primitive_vectors(std::size_t rank, int bound);

/**
 * Depth-first search over characteristic maps with entries in [-B, B].
 *
 * The base vertex columns are fixed to the standard basis in the given
 * order (for the all-positive goal with a negatively ordered base tuple the
 * first one becomes -e_1 so the base sign is +1). Every GL(n,Z) orbit with
 * the goal property meets this slice. Each time a vertex becomes fully
 * assigned its determinant is tested, and violations prune the branch.
 * Top-level branches can run on several workers; results are merged in
 * branch order so the output does not depend on `jobs`.
 */
SearchResult search(const SimplePolytope& polytope, const OrientationData& orientation,
                    const SearchConfig& config);

/// Order in which non-base facets are assigned (greedy, ties to lowest index).
IndexSet heuristic_facet_order(const SimplePolytope& polytope, std::span<const std::size_t> base);

}  // namespace qtoric
