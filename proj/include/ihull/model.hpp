#ifndef IHULL_MODEL_HPP
#define IHULL_MODEL_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "ihull/matrix.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

/** Inequality system Ax <= b with integer data. */
struct LinearSystem {
    IntMatrix A;
    std::vector<Int> b;

    LinearSystem(IntMatrix a, std::vector<Int> rhs);

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }

    bool operator==(const LinearSystem&) const = default;
};

/**
 * Knapsack constraint a·x <= a0 over nonnegative integer vectors. The plain
 * constructor demands strictly positive weights; relaxed_instance admits
 * zero weights (the solution set is then unbounded along those axes).
 */
struct KnapsackInstance {
    std::vector<Int> a;
    Int a0;
    bool relaxed = false;

    KnapsackInstance(std::vector<Int> weights, Int bound);
    static KnapsackInstance relaxed_instance(std::vector<Int> weights, Int bound);

    std::size_t dim() const { return a.size(); }

  private:
    KnapsackInstance() = default;
};

/**
 * Congruence a·x ≡ a0 (mod delta) over the box [0, delta-1]^n. Coefficients
 * and right-hand side are stored reduced mod delta.
 */
struct CongruenceInstance {
    std::vector<Int> a;
    Int a0;
    Int delta;

    CongruenceInstance(std::vector<Int> coeffs, Int rhs, Int modulus);

    std::size_t dim() const { return a.size(); }
};

/** Equality system eq·y = rhs, y >= 0, from splitting x and adding slacks. */
struct StandardFormSystem {
    IntMatrix eq; // m x (2n + m): [A | -A | I]
    std::vector<Int> rhs;
    std::size_t orig_vars;
};

/** Largest absolute entry of A. */
Int alpha(const LinearSystem& sys);

/** Largest weight of a knapsack instance. */
Int alpha1(const KnapsackInstance& k);

/**
 * Max over rows of 1 + sum_j (1 + log2(1 + |a_ij|)) + log2(1 + |b_i|),
 * the bit-size measure the vertex-count bounds are stated in.
 */
Real encoding_length(const LinearSystem& sys);

StandardFormSystem to_standard_form(const LinearSystem& sys);

/**
 * Largest absolute value of an order-n minor of A (n = number of columns).
 * Requires m >= n; zero when rank(A) < n.
 */
Int delta_A(const LinearSystem& sys);

/**
 * All vertices of {x : Ax <= b}, found by enumerating row subsets of size n
 * and keeping the feasible nondegenerate intersection points. Requires
 * rank(A) = n and m <= 20; throws EmptyRegionError when the polyhedron is
 * empty. Output is lexicographically sorted and duplicate-free.
 */
std::vector<std::vector<Rat>> rational_vertices(const LinearSystem& sys);

/** Row indices i with b_i - a_i·v < n * delta_A(sys); zero-based. */
std::set<std::size_t> active_index_set(const LinearSystem& sys,
                                       const std::vector<Rat>& v);

/** Coordinatewise rounding, halves away from zero. */
std::vector<Int> round_point(const std::vector<Rat>& v);

/**
 * The system local to a rational vertex v: rows J = active_index_set(sys, v)
 * with right-hand side shifted by the rounded point w, so x solves the
 * shifted system iff w + x solves the selected rows of the original.
 */
struct ShiftedSystem {
    LinearSystem system;
    std::vector<Int> w;
    std::vector<std::size_t> row_indices;
};

ShiftedSystem shift_by_rounded_vertex(const LinearSystem& sys,
                                      const std::vector<Rat>& v);

/**
 * Max over coordinates of (max x_j - min x_j) over {x : Ax <= b}. Throws
 * UnboundedError or EmptyRegionError when undefined.
 */
Rat diameter(const LinearSystem& sys);

/**
 * The knapsack constraint as an inequality system: rows -x_j <= 0 for each
 * j, then a·x <= a0.
 */
LinearSystem knapsack_system(const KnapsackInstance& k);

} // namespace ihull

#endif
