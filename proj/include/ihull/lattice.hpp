#ifndef IHULL_LATTICE_HPP
#define IHULL_LATTICE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ihull/model.hpp"
#include "ihull/numbers.hpp"

namespace ihull {

/** Integer bounding box; empty when lo[j] > hi[j] for some j. */
struct Box {
    std::vector<Int> lo, hi;

    bool empty() const {
        for (std::size_t j = 0; j < lo.size(); ++j)
            if (lo[j] > hi[j]) return true;
        return false;
    }
};

/**
 * Componentwise integer bounds of {x : Ax <= b}: lo_j = ceil(min x_j),
 * hi_j = floor(max x_j), both by exact LP. Throws EmptyRegionError or
 * UnboundedError.
 */
Box bounding_box(const LinearSystem& sys);

/**
 * Integer range [ceil(min x_j), floor(max x_j)] of one coordinate by exact
 * LP; nullopt when the polyhedron is empty. Throws UnboundedError.
 */
std::optional<std::pair<Int, Int>> axis_bounds(const LinearSystem& sys, std::size_t j);

/** The system with its first variable fixed to the given value. */
LinearSystem substitute_first(const LinearSystem& sys, const Int& value);

/**
 * Integer solutions of a one-variable system as [lo, hi]; nullopt when
 * empty. Throws UnboundedError when a side is unconstrained.
 */
std::optional<std::pair<Int, Int>> integer_interval(const LinearSystem& sys);

/**
 * All integer points of a bounded {x : Ax <= b} in lexicographic order,
 * found by fixing coordinates left to right with LP bounds per prefix.
 * Throws CapExceeded once more than point_cap points accumulate.
 */
std::vector<std::vector<Int>> enumerate_integer_points(const LinearSystem& sys,
                                                       const Int& point_cap);

/** Dyadic cell of a nonnegative integer point: index 0 covers [0,1), index i >= 1 covers [2^(i-1), 2^i). */
std::vector<Int> dyadic_cell(const std::vector<Int>& point);

/**
 * Number of dyadic cells (products of the intervals above) that meet the
 * hyperplane through the axis intercepts c_j = floor(a0 / a_j), i.e.
 * sum_j x_j / c_j = 1 restricted to the nonnegative orthant. Weights must
 * be positive and no intercept may vanish.
 */
Int count_boxes_meeting_hyperplane(const std::vector<Int>& a, const Int& a0);

} // namespace ihull

#endif
