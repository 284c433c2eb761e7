#ifndef IHULL_HULL_HPP
#define IHULL_HULL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ihull/model.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

/**
 * Vertex set of the convex hull of the integer points of some region,
 * together with the recession generators the hull was computed against.
 * Vertices are lexicographically sorted; no vertex lies in the convex hull
 * of the others plus the cone of the generators.
 */
struct IntegerHull {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> vertices;
    std::vector<std::vector<Int>> recession_generators;

    bool operator==(const IntegerHull&) const = default;
};

/**
 * Exact membership test: is p a convex combination of gen_points plus a
 * nonnegative combination of cone_gens? Decided by one feasibility LP.
 */
bool point_in_hull(const std::vector<Int>& p,
                   const std::vector<std::vector<Int>>& gen_points,
                   const std::vector<std::vector<Int>>& cone_gens);

/**
 * Vertices of the integer hull of a bounded {x : Ax <= b}. Empty systems
 * yield an empty hull; unbounded ones throw UnboundedError. point_cap
 * bounds the number of integer points the search may touch.
 */
IntegerHull integer_hull_vertices(const LinearSystem& sys, const Int& point_cap);

/**
 * Vertices of the integer hull of {x >= 0 : a·x <= a0} for positive
 * weights. Dimensions one and two take an LP-free closed-form route.
 */
IntegerHull knapsack_hull_vertices(const KnapsackInstance& k, const Int& point_cap);

/**
 * Vertices of the integer hull of a possibly unbounded {x : Ax <= b}. Each
 * generator must be a nonzero integer recession direction (A·g <= 0,
 * checked exactly); together they must generate the hull's full recession
 * cone, or the windowing below cannot settle. Unbounded axis directions are
 * clipped at a window derived from the data (or at initial_window when
 * nonzero), points on the clip boundary are discarded, and the window is
 * doubled until the vertex set stabilizes; persistent disagreement raises
 * InstabilityError.
 */
IntegerHull hull_with_recession(const LinearSystem& sys,
                                const std::vector<std::vector<Int>>& recession_generators,
                                const Int& point_cap, const Int& initial_window = Int(0));

/**
 * Primitive extreme rays of the pointed cone {d : Ad <= 0}, for up to three
 * columns. Requires rank(A) equal to the column count.
 */
std::vector<std::vector<Int>> cone_extreme_rays(const IntMatrix& A);

/**
 * Vertices of conv(S) + nonnegative orthant for the solution set S of
 * a·x ≡ a0 (mod delta) inside [0, delta-1]^n. The recession generators of
 * the result are the unit vectors.
 */
IntegerHull congruence_hull_vertices(const CongruenceInstance& c, const Int& point_cap);

/**
 * The knapsack solution set split by which variable is allowed to run
 * negative: piece 0 is the origin alone, piece i relaxes the sign of x_i.
 * The union of the pieces' vertex sets contains all hull vertices of the
 * instance once a0 >= alpha1 * (alpha1 - 1); threshold_met records whether
 * that inequality holds.
 */
struct SignRelaxation {
    std::vector<IntegerHull> pieces;
    bool threshold_met = false;
};

SignRelaxation sign_relaxation_decomposition(const KnapsackInstance& k,
                                             const Int& point_cap);

/**
 * Vertices of the hull of the standard-form image of a bounded
 * {x : Ax <= b}: each integer point x maps to (x+, x-, b - Ax) and the
 * recession generators are (e_j, e_j, 0).
 */
IntegerHull standard_form_hull_vertices(const LinearSystem& sys, const Int& point_cap);

/**
 * Number of facets of a bounded full-dimensional hull in dimension at most
 * three. Dimension two returns the vertex count; dimension three enumerates
 * supporting planes through vertex triples.
 */
long facet_count(const IntegerHull& h);

/** Outcome of the pairwise separation test; x/y hold the first failing pair. */
struct SeparationCheck {
    bool holds = true;
    std::vector<Int> x, y;
};

/** Coordinate j with 2 * min(x_j, y_j) < max(x_j, y_j), if one exists. */
std::optional<std::size_t> separating_coordinate(const std::vector<Int>& x,
                                                 const std::vector<Int>& y);

/**
 * Do all unordered pairs of the given nonnegative points admit a separating
 * coordinate? Returns the first failing pair otherwise.
 */
SeparationCheck has_separation_property(const std::vector<std::vector<Int>>& points);

} // namespace ihull

#endif
