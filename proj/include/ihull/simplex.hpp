#ifndef IHULL_SIMPLEX_HPP
#define IHULL_SIMPLEX_HPP

#include <vector>

#include "ihull/numbers.hpp"

namespace ihull {

enum class LpStatus { optimum, infeasible, unbounded };

/**
 * Result of an exact LP solve. point/value are meaningful only for
 * status == optimum; the point is a basic feasible solution and both are
 * exact rationals.
 */
struct LpResult {
    LpStatus status;
    Rat value;
    std::vector<Rat> point;
};

/**
 * Exact two-phase simplex for min c·x subject to Ax = b, x ≥ 0.
 * Dense rational tableau; Bland's rule on both the entering and the leaving
 * choice, so the iteration terminates on every input.
 */
LpResult solve_standard_min(const std::vector<std::vector<Rat>>& A,
                            const std::vector<Rat>& b,
                            const std::vector<Rat>& c);

/** Phase 1 only: is {x ≥ 0 : Ax = b} nonempty? */
bool standard_feasible(const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b);

/** One row of an inequality system: coeffs·x ≤ rhs. */
struct Inequality {
    std::vector<Rat> coeffs;
    Rat rhs;
};

/**
 * Exact LP over free (sign-unrestricted) variables:
 * maximize objective·x subject to the inequality list.
 * Internally splits x into nonnegative parts and adds slacks.
 */
LpResult lp_solve(const std::vector<Rat>& objective,
                  const std::vector<Inequality>& constraints);

} // namespace ihull

#endif
