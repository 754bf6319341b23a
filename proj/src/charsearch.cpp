#include "qtoric/charsearch.hpp"

#include "qtoric/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace qtoric {

std::string to_string(SearchGoal goal) {
    return goal == SearchGoal::unimodular ? "unimodular" : "all-positive";
}

SearchGoal parse_search_goal(const std::string& text) {
    if (text == "unimodular") return SearchGoal::unimodular;
    if (text == "all-positive") return SearchGoal::all_positive;
    throw ValidationError("unknown search goal '" + text + "' (expected unimodular|all-positive)");
}

CharacteristicMap normalize_map(const SimplePolytope& polytope, const CharacteristicMap& map,
                                std::span<const std::size_t> base_tuple,
                                const OrientationData& orientation) {
    require_compatible(polytope, map);
    require_compatible(polytope, orientation);
    if (polytope.find_vertex(base_tuple) == SimplePolytope::npos) {
        throw NormalizationError("base " + tuple_label(base_tuple) + " is not a vertex");
    }
    try {
        return map.transformed(inverse_unimodular(map.minor(base_tuple)));
    } catch (const UnimodularityError& e) {
        throw NormalizationError("base minor at " + tuple_label(base_tuple) +
                                 " cannot be normalized: " + e.what());
    }
}

std::vector<IntVector> bounded_primitive_vectors(std::size_t rank, int bound) {
    std::vector<IntVector> out;
    std::vector<int> v(rank, -bound);
    for (;;) {
        int g = 0;
        for (int x : v) g = std::gcd(g, std::abs(x));
        if (g == 1) out.emplace_back(v.begin(), v.end());
        std::size_t k = rank;
        while (k > 0 && v[k - 1] == bound) v[--k] = -bound;
        if (k == 0) break;
        ++v[k - 1];
    }
    return out;
}

IndexSet heuristic_facet_order(const SimplePolytope& polytope, std::span<const std::size_t> base) {
    std::vector<bool> assigned(polytope.num_facets, false);
    for (std::size_t f : base) assigned[f] = true;
    IndexSet order;
    const std::size_t free_count = polytope.num_facets - base.size();
    while (order.size() < free_count) {
        std::size_t best = polytope.num_facets;
        std::size_t best_score = 0;
        for (std::size_t f = 0; f < polytope.num_facets; ++f) {
            if (assigned[f]) continue;
            std::size_t score = 0;
            for (const auto& v : polytope.vertices) {
                if (!std::binary_search(v.begin(), v.end(), f)) continue;
                if (std::any_of(v.begin(), v.end(), [&](std::size_t g) { return assigned[g]; })) ++score;
            }
            if (best == polytope.num_facets || score > best_score) {
                best = f;
                best_score = score;
            }
        }
        assigned[best] = true;
        order.push_back(best);
    }
    return order;
}

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t det_small(std::vector<std::int64_t> m, std::size_t n) {
    // Bareiss on int64 entries; products widened to 128 bits.
    std::int64_t previous = 1;
    int parity = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot * n + k] == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[pivot * n + c]);
            parity = -parity;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 num = static_cast<__int128>(m[i * n + j]) * m[k * n + k] -
                                     static_cast<__int128>(m[i * n + k]) * m[k * n + j];
                m[i * n + j] = static_cast<std::int64_t>(num / previous);
            }
            m[i * n + k] = 0;
        }
        previous = m[k * n + k];
    }
    return parity * m[(n - 1) * n + (n - 1)];
}

struct VertexCheck {
    IndexSet tuple;  // positively ordered
};

struct Problem {
    std::size_t rank = 0;
    SearchGoal goal = SearchGoal::unimodular;
    std::vector<Vec> candidates;
    IndexSet free_order;
    /// checks[d]: vertices completed when free_order[d] is assigned.
    std::vector<std::vector<VertexCheck>> checks;
    std::vector<Vec> fixed;  // per facet, filled for base facets
    std::size_t num_facets = 0;
};

struct BranchOutcome {
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool cap_hit = false;
    /// (node stamp, candidate index per free depth)
    std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> solutions;
};

class BranchSearch {
public:
    BranchSearch(const Problem& problem, std::uint64_t budget, std::size_t cap)
        : p_(problem), budget_(budget), cap_(cap), current_(problem.num_facets),
          choice_(problem.free_order.size()) {
        for (std::size_t f = 0; f < p_.num_facets; ++f)
            if (!p_.fixed[f].empty()) current_[f] = &p_.fixed[f];
        scratch_.resize(p_.rank * p_.rank);
    }

    BranchOutcome run(std::size_t root_candidate) {
        try_candidate(0, root_candidate);
        return std::move(out_);
    }

private:
    bool stopped() const { return out_.budget_hit || out_.cap_hit; }

    bool accept(std::size_t depth) {
        for (const auto& check : p_.checks[depth]) {
            const std::size_t n = p_.rank;
            for (std::size_t k = 0; k < n; ++k) {
                const Vec& col = *current_[check.tuple[k]];
                for (std::size_t r = 0; r < n; ++r) scratch_[r * n + k] = col[r];
            }
            const std::int64_t det = det_small(scratch_, n);
            if (p_.goal == SearchGoal::all_positive ? det != 1 : (det != 1 && det != -1)) return false;
        }
        return true;
    }

    void try_candidate(std::size_t depth, std::size_t candidate) {
        if (out_.nodes >= budget_) {
            out_.budget_hit = true;
            return;
        }
        ++out_.nodes;
        const std::size_t facet = p_.free_order[depth];
        current_[facet] = &p_.candidates[candidate];
        choice_[depth] = candidate;
        if (accept(depth)) {
            if (depth + 1 == p_.free_order.size()) {
                out_.solutions.emplace_back(out_.nodes, choice_);
                if (cap_ != 0 && out_.solutions.size() >= cap_) out_.cap_hit = true;
            } else {
                for (std::size_t c = 0; c < p_.candidates.size() && !stopped(); ++c) {
                    try_candidate(depth + 1, c);
                }
            }
        }
        current_[facet] = nullptr;
    }

    const Problem& p_;
    std::uint64_t budget_;
    std::size_t cap_;
    std::vector<const Vec*> current_;
    std::vector<std::size_t> choice_;
    std::vector<std::int64_t> scratch_;
    BranchOutcome out_;
};

}  // namespace

SearchResult search(const SimplePolytope& polytope, const OrientationData& orientation,
                    const SearchConfig& config) {
    require_compatible(polytope, orientation);
    const std::size_t n = polytope.dimension;
    if (config.bound < 1) throw ValidationError("search bound must be at least 1");
    if (std::pow(config.bound * std::sqrt(static_cast<double>(n)), static_cast<double>(n)) > 1e17) {
        throw ValidationError("search bound too large for 64-bit determinants");
    }
    const std::size_t base_index = polytope.find_vertex(config.base_vertex);
    if (config.base_vertex.size() != n || base_index == SimplePolytope::npos) {
        throw ValidationError("base vertex " + tuple_label(config.base_vertex) + " is not a vertex");
    }

    SearchResult result;
    result.base_parity = permutation_sign(config.base_vertex, orientation.tuples[base_index]);

    Problem problem;
    problem.rank = n;
    problem.goal = config.goal;
    problem.num_facets = polytope.num_facets;
    for (const auto& v : bounded_primitive_vectors(n, config.bound)) {
        Vec c;
        for (const auto& x : v) c.push_back(x.convert_to<std::int64_t>());
        problem.candidates.push_back(std::move(c));
    }
    result.candidates_per_facet = problem.candidates.size();

    problem.fixed.assign(polytope.num_facets, {});
    for (std::size_t k = 0; k < n; ++k) {
        Vec e(n, 0);
        e[k] = 1;
        if (k == 0 && config.goal == SearchGoal::all_positive && result.base_parity < 0) e[k] = -1;
        problem.fixed[config.base_vertex[k]] = std::move(e);
    }

    if (config.facet_order) {
        std::vector<bool> seen(polytope.num_facets, false);
        for (std::size_t f : config.base_vertex) seen[f] = true;
        for (std::size_t f : *config.facet_order) {
            if (f >= polytope.num_facets) throw ValidationError("facet order names a facet out of range");
            if (std::find(config.base_vertex.begin(), config.base_vertex.end(), f) != config.base_vertex.end()) continue;
            if (seen[f]) throw ValidationError("facet order repeats facet " + std::to_string(f + 1));
            seen[f] = true;
            problem.free_order.push_back(f);
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw ValidationError("facet order does not cover every non-base facet");
        }
    } else {
        problem.free_order = heuristic_facet_order(polytope, config.base_vertex);
    }
    result.assignment_order = config.base_vertex;
    result.assignment_order.insert(result.assignment_order.end(), problem.free_order.begin(),
                                   problem.free_order.end());

    std::vector<std::size_t> depth_of(polytope.num_facets, 0);  // 0 = base
    for (std::size_t d = 0; d < problem.free_order.size(); ++d) depth_of[problem.free_order[d]] = d + 1;
    problem.checks.assign(problem.free_order.size(), {});
    for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
        std::size_t last = 0;
        for (std::size_t f : polytope.vertices[v]) last = std::max(last, depth_of[f]);
        if (last == 0) continue;  // the base vertex itself
        problem.checks[last - 1].push_back({orientation.tuples[v]});
    }

    auto to_map = [&](const std::vector<std::size_t>& choice) {
        std::vector<IntVector> vectors(polytope.num_facets);
        for (std::size_t f = 0; f < polytope.num_facets; ++f) {
            const Vec& src = problem.fixed[f].empty() ? problem.candidates[choice[depth_of[f] - 1]]
                                                      : problem.fixed[f];
            vectors[f].assign(src.begin(), src.end());
        }
        return CharacteristicMap(n, std::move(vectors));
    };

    if (problem.free_order.empty()) {
        // Only the base vertex: the fixed minor is the unique normalized map.
        result.nodes = 0;
        result.exhaustive = true;
        result.solutions.push_back(to_map({}));
        return result;
    }

    const std::size_t branches = problem.candidates.size();
    std::vector<BranchOutcome> outcomes(branches);
    const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(branches)));
    auto run_branch = [&](std::size_t b) {
        BranchSearch bs(problem, config.node_budget, config.solution_cap);
        outcomes[b] = bs.run(b);
    };
    if (workers == 1) {
        // Sequential runs can stop as soon as the merged result is settled.
        std::uint64_t offset = 0;
        std::size_t found = 0;
        for (std::size_t b = 0; b < branches; ++b) {
            run_branch(b);
            offset += outcomes[b].nodes;
            found += outcomes[b].solutions.size();
            if (offset >= config.node_budget || (config.solution_cap != 0 && found >= config.solution_cap)) {
                if (b + 1 < branches) outcomes.resize(b + 1);
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < branches; b = next++) run_branch(b);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Merge in branch order, replaying the sequential budget and cap rules.
    std::uint64_t offset = 0;
    bool stopped = false;
    for (std::size_t b = 0; b < outcomes.size() && !stopped; ++b) {
        const BranchOutcome& o = outcomes[b];
        if (offset >= config.node_budget) {
            result.budget_exhausted = true;
            stopped = true;
            break;
        }
        for (const auto& [stamp, choice] : o.solutions) {
            if (offset + stamp > config.node_budget) break;
            result.solutions.push_back(to_map(choice));
            if (config.solution_cap != 0 && result.solutions.size() >= config.solution_cap) {
                result.cap_reached = true;
                result.nodes = offset + stamp;
                stopped = true;
                break;
            }
        }
        if (stopped) break;
        if (o.budget_hit || offset + o.nodes > config.node_budget) {
            result.budget_exhausted = true;
            offset = config.node_budget;
            stopped = true;
            break;
        }
        offset += o.nodes;
    }
    if (!result.cap_reached) result.nodes = offset;
    if (outcomes.size() < branches && !stopped) {
        // Sequential early exit landed exactly on the budget after the last kept branch.
        result.budget_exhausted = true;
    }
    result.exhaustive = !result.budget_exhausted && !result.cap_reached;
    return result;
}

}  // namespace qtoric
