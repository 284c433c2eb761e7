#include "doctest.h"

#include "ihull/errors.hpp"
#include "ihull/hull.hpp"
#include "ihull/lattice.hpp"

using namespace ihull;

namespace {

LinearSystem orthant_simplex(long rhs) {
    // x, y >= 0, x + y <= rhs
    return LinearSystem(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, {Int(0), Int(0), Int(rhs)});
}

// does the dyadic box with the given cell indices meet sum_j x_j / c_j = 1?
bool box_meets(const std::vector<Int>& cell, const std::vector<Int>& c) {
    Rat at_lo(0), at_hi(0);
    for (std::size_t j = 0; j < cell.size(); ++j) {
        long idx = cell[j].convert_to<long>();
        Int lo = idx == 0 ? Int(0) : Int(1) << (unsigned)(idx - 1);
        Int hi = Int(1) << (unsigned)idx;
        at_lo += make_rat(lo, c[j]);
        at_hi += make_rat(hi, c[j]);
    }
    // cells are half-open, so the upper corner itself is excluded
    return at_lo <= 1 && at_hi > 1;
}

Int brute_box_count(const std::vector<Int>& a, const Int& a0) {
    std::vector<Int> c;
    for (const Int& w : a) c.push_back(a0 / w);
    std::vector<Int> cell(a.size(), Int(0));
    Int count(0);
    for (;;) {
        if (box_meets(cell, c)) ++count;
        std::size_t j = 0;
        for (; j < cell.size(); ++j) {
            if (cell[j] <= floor_log2(c[j]) + 1) {
                ++cell[j];
                break;
            }
            cell[j] = 0;
        }
        if (j == cell.size()) return count;
    }
}

} // namespace

TEST_CASE("bounding box of polyhedra") {
    Box b = bounding_box(orthant_simplex(5));
    CHECK(b.lo == std::vector<Int>{0, 0});
    CHECK(b.hi == std::vector<Int>{5, 5});
    CHECK_FALSE(b.empty());

    // fractional bounds shrink to integers: 0 <= 2x <= 5
    LinearSystem frac(IntMatrix{{-2}, {2}}, {Int(-1), Int(5)});
    Box f = bounding_box(frac);
    CHECK(f.lo == std::vector<Int>{1});
    CHECK(f.hi == std::vector<Int>{2});

    CHECK_THROWS_AS(bounding_box(LinearSystem(IntMatrix{{-1}}, {Int(0)})),
                    UnboundedError);
    CHECK_THROWS_AS(bounding_box(LinearSystem(IntMatrix{{1}, {-1}}, {Int(-1), Int(0)})),
                    EmptyRegionError);
}

TEST_CASE("per-axis integer bounds") {
    auto r = axis_bounds(orthant_simplex(5), 1);
    REQUIRE(r.has_value());
    CHECK(r->first == 0);
    CHECK(r->second == 5);

    CHECK_FALSE(axis_bounds(LinearSystem(IntMatrix{{1}, {-1}}, {Int(-1), Int(0)}), 0)
                    .has_value());
    CHECK_THROWS_AS(axis_bounds(orthant_simplex(5), 2), DomainError);
    CHECK_THROWS_AS(axis_bounds(LinearSystem(IntMatrix{{-1}}, {Int(0)}), 0),
                    UnboundedError);
}

TEST_CASE("fixing the first coordinate") {
    LinearSystem s = orthant_simplex(3);
    LinearSystem fixed = substitute_first(s, Int(1));
    CHECK(fixed.cols() == 1);
    auto iv = integer_interval(fixed);
    REQUIRE(iv.has_value());
    CHECK(iv->first == 0);
    CHECK(iv->second == 2);

    CHECK_THROWS_AS(substitute_first(fixed, Int(0)), DomainError);
}

TEST_CASE("integer interval of one-variable systems") {
    LinearSystem s(IntMatrix{{2}, {-1}}, {Int(5), Int(0)});
    auto iv = integer_interval(s);
    REQUIRE(iv.has_value());
    CHECK(iv->first == 0);
    CHECK(iv->second == 2);

    auto tight = integer_interval(LinearSystem(IntMatrix{{2}, {-2}}, {Int(5), Int(-1)}));
    REQUIRE(tight.has_value());
    CHECK(tight->first == 1);
    CHECK(tight->second == 2);

    CHECK_FALSE(integer_interval(LinearSystem(IntMatrix{{1}, {-1}}, {Int(-1), Int(0)}))
                    .has_value());
    CHECK_THROWS_AS(integer_interval(LinearSystem(IntMatrix{{-1}}, {Int(0)})),
                    UnboundedError);
    CHECK_THROWS_AS(integer_interval(orthant_simplex(1)), DomainError);
}

TEST_CASE("lexicographic enumeration of integer points") {
    auto pts = enumerate_integer_points(orthant_simplex(2), Int(100));
    std::vector<std::vector<Int>> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    CHECK(pts == want);

    CHECK(enumerate_integer_points(
              LinearSystem(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                           {Int(-1), Int(0), Int(1), Int(0)}),
              Int(100))
              .empty());

    CHECK_THROWS_AS(enumerate_integer_points(orthant_simplex(2), Int(5)), CapExceeded);
    CHECK_THROWS_AS(enumerate_integer_points(orthant_simplex(2), Int(0)), DomainError);
}

TEST_CASE("dyadic cell indices") {
    CHECK(dyadic_cell({Int(0)}) == std::vector<Int>{0});
    CHECK(dyadic_cell({Int(1)}) == std::vector<Int>{1});
    CHECK(dyadic_cell({Int(2)}) == std::vector<Int>{2});
    CHECK(dyadic_cell({Int(3)}) == std::vector<Int>{2});
    CHECK(dyadic_cell({Int(4)}) == std::vector<Int>{3});
    CHECK(dyadic_cell({Int(7)}) == std::vector<Int>{3});
    CHECK(dyadic_cell({Int(8)}) == std::vector<Int>{4});
    CHECK(dyadic_cell({Int(0), Int(5)}) == std::vector<Int>{0, 3});
    CHECK_THROWS_AS(dyadic_cell({Int(-1)}), DomainError);
}

TEST_CASE("hyperplane-meeting box count against direct enumeration") {
    std::vector<std::pair<std::vector<Int>, Int>> cases{
        {{Int(1), Int(1)}, Int(1)},  {{Int(2), Int(1)}, Int(3)},
        {{Int(2), Int(3)}, Int(7)},  {{Int(3), Int(5)}, Int(15)},
        {{Int(1), Int(1)}, Int(12)}, {{Int(1), Int(1), Int(1)}, Int(2)},
        {{Int(2), Int(3), Int(4)}, Int(13)}};
    for (const auto& [a, a0] : cases)
        CHECK(count_boxes_meeting_hyperplane(a, a0) == brute_box_count(a, a0));

    CHECK_THROWS_AS(count_boxes_meeting_hyperplane({Int(0)}, Int(3)), DomainError);
    CHECK_THROWS_AS(count_boxes_meeting_hyperplane({Int(5)}, Int(3)), DomainError);
    CHECK_THROWS_AS(count_boxes_meeting_hyperplane({}, Int(3)), DomainError);
}

TEST_CASE("hull vertices occupy pairwise distinct dyadic cells") {
    for (long a1 = 1; a1 <= 4; ++a1)
        for (long a2 = 1; a2 <= 4; ++a2)
            for (long a0 = std::max(a1, a2); a0 <= 12; ++a0) {
                KnapsackInstance k({Int(a1), Int(a2)}, Int(a0));
                IntegerHull h = knapsack_hull_vertices(k, Int(100000));
                std::vector<std::vector<Int>> cells;
                for (const auto& v : h.vertices) cells.push_back(dyadic_cell(v));
                std::sort(cells.begin(), cells.end());
                CHECK(std::adjacent_find(cells.begin(), cells.end()) == cells.end());
            }
}
