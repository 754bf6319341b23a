#include "qtoric/gf2.hpp"

#include "qtoric/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <string>

namespace qtoric {

namespace {

struct Row {
    boost::dynamic_bitset<> vars;
    bool rhs = false;
    boost::dynamic_bitset<> origin;  // which input equations were summed
};

}  // namespace

Gf2Result gf2_solve(const Gf2System& system) {
    const std::size_t n = system.num_vars;
    const std::size_t m = system.equations.size();
    std::vector<Row> rows(m);
    for (std::size_t e = 0; e < m; ++e) {
        rows[e].vars.resize(n);
        rows[e].origin.resize(m);
        rows[e].origin.set(e);
        rows[e].rhs = system.equations[e].rhs;
        for (std::size_t v : system.equations[e].support) {
            if (v >= n) {
                throw ValidationError("GF(2) equation " + std::to_string(e) +
                                      " references variable " + std::to_string(v) +
                                      " out of range");
            }
            rows[e].vars.flip(v);
        }
    }

    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot_row_of(n, m);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = m;
        for (std::size_t r = 0; r < m; ++r) {
            if (!used[r] && rows[r].vars.test(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == m) continue;
        used[pivot] = true;
        pivot_row_of[col] = pivot;
        ++rank;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pivot || !rows[r].vars.test(col)) continue;
            rows[r].vars ^= rows[pivot].vars;
            rows[r].rhs ^= rows[pivot].rhs;
            rows[r].origin ^= rows[pivot].origin;
        }
    }

    for (std::size_t r = 0; r < m; ++r) {
        if (!used[r] && rows[r].rhs) {
            Gf2Infeasible cert;
            for (std::size_t e = rows[r].origin.find_first(); e != boost::dynamic_bitset<>::npos;
                 e = rows[r].origin.find_next(e)) {
                cert.equations.push_back(e);
            }
            return cert;
        }
    }

    Gf2Solution solution;
    solution.assignment.assign(n, false);
    solution.dimension = n - rank;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row_of[col] != m) solution.assignment[col] = rows[pivot_row_of[col]].rhs;
    }
    return solution;
}

bool gf2_satisfies(const Gf2System& system, const std::vector<bool>& assignment) {
    for (const auto& eq : system.equations) {
        bool acc = false;
        for (std::size_t v : eq.support) acc ^= static_cast<bool>(assignment.at(v));
        if (acc != eq.rhs) return false;
    }
    return true;
}

}  // namespace qtoric
