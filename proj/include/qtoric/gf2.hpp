#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace qtoric {

/// One equation sum_{i in support} x_i = rhs over GF(2). Repeated indices cancel.
struct Gf2Equation {
    std::vector<std::size_t> support;
    bool rhs = false;
};

struct Gf2System {
    std::size_t num_vars = 0;
    std::vector<Gf2Equation> equations;
};

struct Gf2Solution {
    /// Free variables are set to 0.
    std::vector<bool> assignment;
    /// Dimension of the affine solution space (num_vars - rank).
    std::size_t dimension = 0;
};

/// Indices of equations whose sum is 0 = 1.
struct Gf2Infeasible {
    std::vector<std::size_t> equations;
};

using Gf2Result = std::variant<Gf2Solution, Gf2Infeasible>;

/**
 * Gauss-Jordan elimination over GF(2). Pivots are taken in increasing
 * variable order, and within a column the lowest-indexed unused equation
 * wins, so the solution and the certificate are reproducible.
 */
Gf2Result gf2_solve(const Gf2System& system);

/// True when the assignment satisfies every equation.
bool gf2_satisfies(const Gf2System& system, const std::vector<bool>& assignment);

}  // namespace qtoric
