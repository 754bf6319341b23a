#pragma once

#include "qtoric/errors.hpp"
#include "qtoric/number.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qtoric {

/// sum_j coeffs[j] * z_j = rhs over an ordered field (Q or Q(sqrt2)).
template <typename Field>
struct BasicLinearEquality {
    std::vector<Field> coeffs;
    Field rhs{0};
};

template <typename Field>
struct BasicStrictFeasibility {
    bool feasible = false;
    /// A solution with every listed variable > 0 (empty when infeasible).
    std::vector<Field> witness;
    std::size_t pivots = 0;
};

using LinearEquality = BasicLinearEquality<BigRational>;
using StrictFeasibility = BasicStrictFeasibility<BigRational>;

namespace detail {

/// Phase-1 tableau for  M w = c, w >= 0, with one artificial per row.
template <typename Field>
class PhaseOneTableau {
public:
    PhaseOneTableau(std::vector<std::vector<Field>> rows, std::vector<Field> rhs)
        : num_rows_(rows.size()), num_structural_(rows.empty() ? 0 : rows.front().size()) {
        const std::size_t width = num_structural_ + num_rows_;
        table_.assign(num_rows_, std::vector<Field>(width + 1, Field(0)));
        basis_.resize(num_rows_);
        for (std::size_t r = 0; r < num_rows_; ++r) {
            const bool flip = rhs[r] < Field(0);
            for (std::size_t j = 0; j < num_structural_; ++j) {
                table_[r][j] = flip ? Field(-rows[r][j]) : rows[r][j];
            }
            table_[r][num_structural_ + r] = Field(1);
            table_[r][width] = flip ? Field(-rhs[r]) : rhs[r];
            basis_[r] = num_structural_ + r;
        }
        // Minimize the sum of artificials, written in nonbasic terms.
        cost_.assign(width + 1, Field(0));
        for (std::size_t r = 0; r < num_rows_; ++r) {
            for (std::size_t j = 0; j <= width; ++j) {
                if (j >= num_structural_ && j < width) continue;
                cost_[j] -= table_[r][j];
            }
        }
    }

    /// Bland's rule to optimality; returns the optimal phase-1 value.
    Field run() {
        const std::size_t width = num_structural_ + num_rows_;
        for (;;) {
            std::size_t entering = width;
            for (std::size_t j = 0; j < width; ++j) {
                if (cost_[j] < Field(0)) {
                    entering = j;
                    break;
                }
            }
            if (entering == width) break;

            std::size_t leaving = num_rows_;
            Field best_ratio(0);
            for (std::size_t r = 0; r < num_rows_; ++r) {
                if (table_[r][entering] <= Field(0)) continue;
                Field ratio = table_[r][width] / table_[r][entering];
                if (leaving == num_rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            // Phase 1 is bounded below by zero, so some row always limits the step.
            pivot(leaving, entering);
        }
        return -cost_[width];
    }

    std::vector<Field> structural_values() const {
        const std::size_t width = num_structural_ + num_rows_;
        std::vector<Field> values(num_structural_, Field(0));
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (basis_[r] < num_structural_) values[basis_[r]] = table_[r][width];
        }
        return values;
    }

    std::size_t pivots() const noexcept { return pivots_; }

private:
    void pivot(std::size_t row, std::size_t col) {
        const Field pivot_value = table_[row][col];
        for (auto& entry : table_[row]) entry /= pivot_value;
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (r == row || table_[r][col] == Field(0)) continue;
            const Field factor = table_[r][col];
            for (std::size_t j = 0; j < table_[r].size(); ++j) {
                table_[r][j] -= factor * table_[row][j];
            }
        }
        if (cost_[col] != Field(0)) {
            const Field factor = cost_[col];
            for (std::size_t j = 0; j < cost_.size(); ++j) cost_[j] -= factor * table_[row][j];
        }
        basis_[row] = col;
        ++pivots_;
    }

    std::size_t num_rows_;
    std::size_t num_structural_;
    std::vector<std::vector<Field>> table_;
    std::vector<Field> cost_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace detail

/**
 * Decides whether A z = b has a solution with z_i > 0 for every i in
 * strict_positive; the remaining variables are free.
 *
 * The system is homogenized with a scale t > 0 (A z = b t), after which any
 * strictly positive solution can be rescaled so that every strict variable
 * and t are at least 1. Writing those as 1 + slack turns the question into a
 * plain phase-1 problem over nonnegative variables, solved by an exact
 * tableau simplex under Bland's rule.
 */
template <typename Field>
BasicStrictFeasibility<Field> strict_feasibility(
    std::span<const BasicLinearEquality<Field>> equalities, std::size_t num_vars,
    std::span<const std::size_t> strict_positive) {
    std::vector<bool> is_strict(num_vars, false);
    for (std::size_t v : strict_positive) {
        if (v >= num_vars) {
            throw ValidationError("strict variable " + std::to_string(v) + " out of range");
        }
        is_strict[v] = true;
    }
    for (const auto& eq : equalities) {
        if (eq.coeffs.size() != num_vars) {
            throw DimensionError("equality has " + std::to_string(eq.coeffs.size()) +
                                 " coefficients, expected " + std::to_string(num_vars));
        }
    }

    // Columns: one slack per strict variable, (plus, minus) per free variable,
    // then the slack of the homogenizing scale t = 1 + s_t.
    std::vector<std::size_t> first_column(num_vars);
    std::size_t width = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
        first_column[v] = width;
        width += is_strict[v] ? 1 : 2;
    }
    const std::size_t scale_column = width++;

    std::vector<std::vector<Field>> rows;
    std::vector<Field> rhs;
    for (const auto& eq : equalities) {
        std::vector<Field> row(width, Field(0));
        // sum a_v z_v - b t = 0 with strict z_v = 1 + s_v and t = 1 + s_t.
        Field constant = -eq.rhs;
        for (std::size_t v = 0; v < num_vars; ++v) {
            row[first_column[v]] = eq.coeffs[v];
            if (is_strict[v]) {
                constant += eq.coeffs[v];
            } else {
                row[first_column[v] + 1] = -eq.coeffs[v];
            }
        }
        row[scale_column] = -eq.rhs;
        rows.push_back(std::move(row));
        rhs.push_back(-constant);
    }

    BasicStrictFeasibility<Field> result;
    std::vector<Field> values(width, Field(0));
    if (!rows.empty()) {
        detail::PhaseOneTableau<Field> tableau(std::move(rows), std::move(rhs));
        const Field optimum = tableau.run();
        result.pivots = tableau.pivots();
        if (optimum != Field(0)) return result;
        values = tableau.structural_values();
    }

    const Field scale = Field(1) + values[scale_column];
    result.feasible = true;
    result.witness.resize(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) {
        const std::size_t c = first_column[v];
        const Field raw = is_strict[v] ? Field(Field(1) + values[c]) : Field(values[c] - values[c + 1]);
        result.witness[v] = raw / scale;
    }
    return result;
}

template <typename Field>
BasicStrictFeasibility<Field> strict_feasibility(
    const std::vector<BasicLinearEquality<Field>>& equalities, std::size_t num_vars,
    std::span<const std::size_t> strict_positive) {
    return strict_feasibility(std::span<const BasicLinearEquality<Field>>(equalities), num_vars,
                              strict_positive);
}

extern template BasicStrictFeasibility<BigRational> strict_feasibility(
    std::span<const BasicLinearEquality<BigRational>>, std::size_t, std::span<const std::size_t>);
extern template BasicStrictFeasibility<Sqrt2Number> strict_feasibility(
    std::span<const BasicLinearEquality<Sqrt2Number>>, std::size_t, std::span<const std::size_t>);

}  // namespace qtoric
