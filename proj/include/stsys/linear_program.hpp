#pragma once

#include "stsys/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace stsys {

/// One sparse row of a constraint matrix: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/**
 * Linear program in standard form:
 *   minimize c·x  subject to  A x = b,  x >= 0.
 * Rows of A are stored sparsely; duplicate columns within a row are summed.
 */
struct LinearProgram {
    std::size_t num_variables = 0;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;

    explicit LinearProgram(std::size_t n) : num_variables(n), cost(n) {}

    void add_constraint(SparseRow row, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;             // meaningful when Optimal
    std::vector<Rational> x;    // an optimal basic solution when Optimal
    std::size_t pivots = 0;
};

/**
 * Exact two-phase simplex on a dense rational tableau. Entering variables
 * follow the most-negative reduced cost until a degenerate pivot occurs, then
 * Bland's smallest-index rule until the objective strictly improves again;
 * this cannot cycle. Redundant equality rows are detected and dropped after
 * phase one.
 */
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace stsys
