#include "doctest.h"

#include <algorithm>

#include "ihull/census.hpp"
#include "ihull/errors.hpp"
#include "ihull/hull.hpp"
#include "ihull/lattice.hpp"
#include "oracles.hpp"

using namespace ihull;

namespace {

using Point = std::vector<Int>;

const Int kCap = Int(1) << 24;

Point pt(std::initializer_list<long> v) {
    Point out;
    for (long x : v) out.emplace_back(x);
    return out;
}

LinearSystem box2(long s) {
    return LinearSystem(IntMatrix{{-1, 0}, {0, -1}, {1, 0}, {0, 1}},
                        {Int(0), Int(0), Int(s), Int(s)});
}

} // namespace

TEST_CASE("hull membership with and without a cone") {
    std::vector<Point> gens{pt({0, 0}), pt({2, 0}), pt({0, 2})};
    CHECK(point_in_hull(pt({1, 1}), gens, {}));
    CHECK(point_in_hull(pt({0, 0}), gens, {}));
    CHECK_FALSE(point_in_hull(pt({2, 1}), gens, {}));
    CHECK_FALSE(point_in_hull(pt({-1, 0}), gens, {}));

    std::vector<Point> cone{pt({1, 0})};
    CHECK(point_in_hull(pt({5, 1}), gens, cone));
    CHECK_FALSE(point_in_hull(pt({5, 3}), gens, cone));
    CHECK(point_in_hull(pt({7, 0}), {pt({0, 0})}, cone));
}

TEST_CASE("hull of small bounded regions") {
    IntegerHull sq = integer_hull_vertices(box2(10), kCap);
    CHECK(sq.dim == 2);
    CHECK(sq.recession_generators.empty());
    CHECK(sq.vertices ==
          std::vector<Point>{pt({0, 0}), pt({0, 10}), pt({10, 0}), pt({10, 10})});

    LinearSystem tri(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, {Int(0), Int(0), Int(2)});
    CHECK(integer_hull_vertices(tri, kCap).vertices ==
          std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({2, 0})});
}

TEST_CASE("collinear interior points are not vertices") {
    // integer points on the diagonal of a thin slab
    LinearSystem slab(IntMatrix{{-1, 0}, {1, 0}, {2, -2}, {-2, 2}},
                      {Int(0), Int(3), Int(1), Int(1)});
    CHECK(integer_hull_vertices(slab, kCap).vertices ==
          std::vector<Point>{pt({0, 0}), pt({3, 3})});
}

TEST_CASE("hull of empty and oversized regions") {
    LinearSystem empty(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                       {Int(-1), Int(0), Int(1), Int(0)});
    IntegerHull h = integer_hull_vertices(empty, kCap);
    CHECK(h.vertices.empty());
    CHECK(h.dim == 2);

    CHECK_THROWS_AS(integer_hull_vertices(LinearSystem(IntMatrix{{-1}}, {Int(0)}), kCap),
                    UnboundedError);
    CHECK_THROWS_AS(integer_hull_vertices(box2(100), Int(50)), CapExceeded);
    CHECK_THROWS_AS(integer_hull_vertices(box2(1), Int(0)), DomainError);
}

TEST_CASE("bounded hulls agree with the 2-D chain oracle") {
    auto systems = random_bounded_systems(2, 2, 6, Int(6), Int(8), 40, 911, false);
    for (const auto& sys : systems) {
        auto pts = enumerate_integer_points(sys, kCap);
        CHECK(integer_hull_vertices(sys, kCap).vertices == oracles::chain_hull_2d(pts));
    }
}

TEST_CASE("knapsack hulls agree with the generic engine") {
    auto ks = random_knapsacks(2, 3, Int(6), Int(30), 25, 424242);
    for (const auto& k : ks) {
        IntegerHull direct = knapsack_hull_vertices(k, kCap);
        IntegerHull generic = integer_hull_vertices(knapsack_system(k), kCap);
        CHECK(direct.vertices == generic.vertices);
    }
}

TEST_CASE("one-variable knapsack hulls") {
    IntegerHull h = knapsack_hull_vertices(KnapsackInstance({Int(3)}, Int(7)), kCap);
    CHECK(h.vertices == std::vector<Point>{pt({0}), pt({2})});
}

TEST_CASE("zero-weight knapsacks are rejected without recession handling") {
    KnapsackInstance k = KnapsackInstance::relaxed_instance({Int(0), Int(2)}, Int(4));
    CHECK_THROWS_AS(knapsack_hull_vertices(k, kCap), DomainError);
    CHECK(knapsack_vertex_count(k, kCap) == 2); // (0,0) and (0,2)
}

TEST_CASE("recession hull of a shifted cone") {
    // x, y >= 0, 2y <= x + 1; recession cone spanned by (1,0) and (2,1)
    LinearSystem s(IntMatrix{{-1, 0}, {0, -1}, {-1, 2}}, {Int(0), Int(0), Int(1)});
    IntegerHull h = hull_with_recession(s, {pt({2, 1}), pt({1, 0})}, kCap);
    CHECK(h.vertices == std::vector<Point>{pt({0, 0}), pt({1, 1})});
    CHECK(h.recession_generators == std::vector<Point>{pt({1, 0}), pt({2, 1})});
}

TEST_CASE("recession generators that span too little fail to stabilize") {
    LinearSystem s(IntMatrix{{-1, 0}, {0, -1}, {-1, 2}}, {Int(0), Int(0), Int(1)});
    CHECK_THROWS_AS(hull_with_recession(s, {pt({1, 0})}, kCap, Int(1)),
                    InstabilityError);
}

TEST_CASE("recession input validation") {
    LinearSystem s(IntMatrix{{-1, 0}, {0, -1}, {-1, 2}}, {Int(0), Int(0), Int(1)});
    CHECK_THROWS_AS(hull_with_recession(s, {pt({0, 0})}, kCap), DomainError);
    CHECK_THROWS_AS(hull_with_recession(s, {pt({1})}, kCap), DomainError);
    CHECK_THROWS_AS(hull_with_recession(s, {pt({0, -1})}, kCap), DomainError);
    CHECK_THROWS_AS(hull_with_recession(s, {pt({1, 0})}, kCap, Int(-2)), DomainError);
}

TEST_CASE("recession hull handles bounded, empty, and lineality cases") {
    IntegerHull b = hull_with_recession(box2(3), {}, kCap);
    CHECK(b.vertices == integer_hull_vertices(box2(3), kCap).vertices);

    LinearSystem infeasible(IntMatrix{{1, 0}, {-1, 0}, {0, -1}},
                            {Int(-1), Int(0), Int(0)});
    CHECK(hull_with_recession(infeasible, {pt({0, 1})}, kCap).vertices.empty());

    // one inequality over two variables leaves a lineality direction
    LinearSystem line(IntMatrix{{1, 1}}, {Int(0)});
    CHECK(hull_with_recession(line, {pt({1, -1})}, kCap).vertices.empty());
}

TEST_CASE("extreme rays of pointed cones") {
    auto sorted = [](std::vector<Point> v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    CHECK(sorted(cone_extreme_rays(IntMatrix{{-1}})) == std::vector<Point>{pt({1})});
    CHECK(sorted(cone_extreme_rays(IntMatrix{{-1, 0}, {0, -1}})) ==
          std::vector<Point>{pt({0, 1}), pt({1, 0})});
    CHECK(sorted(cone_extreme_rays(IntMatrix{{-1, 0}, {1, -2}})) ==
          std::vector<Point>{pt({0, 1}), pt({2, 1})});
    // rays come out primitive even when the rows share factors
    CHECK(sorted(cone_extreme_rays(IntMatrix{{-2, 0}, {2, -4}})) ==
          std::vector<Point>{pt({0, 1}), pt({2, 1})});

    IntMatrix orthant3(3, 3);
    for (std::size_t i = 0; i < 3; ++i) orthant3(i, i) = -1;
    CHECK(sorted(cone_extreme_rays(orthant3)) ==
          std::vector<Point>{pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 0, 0})});

    // cone over a square: four extreme rays
    IntMatrix pyramid{{1, 0, -1}, {-1, 0, -1}, {0, 1, -1}, {0, -1, -1}};
    CHECK(sorted(cone_extreme_rays(pyramid)) ==
          std::vector<Point>{pt({-1, -1, 1}), pt({-1, 1, 1}), pt({1, -1, 1}),
                             pt({1, 1, 1})});

    CHECK_THROWS_AS(cone_extreme_rays(IntMatrix{{1, 1}, {2, 2}}), DomainError);
    CHECK_THROWS_AS(cone_extreme_rays(IntMatrix(2, 4)), DomainError);
}

TEST_CASE("congruence hulls over the residue box") {
    // x + y = 1 (mod 2): both solutions are vertices
    IntegerHull h1 = congruence_hull_vertices(
        CongruenceInstance({Int(1), Int(1)}, Int(1), Int(2)), kCap);
    CHECK(h1.vertices == std::vector<Point>{pt({0, 1}), pt({1, 0})});
    CHECK(h1.recession_generators == std::vector<Point>{pt({0, 1}), pt({1, 0})});

    // x + y = 0 (mod 2): (1,1) is dominated by (0,0) plus the orthant
    IntegerHull h0 = congruence_hull_vertices(
        CongruenceInstance({Int(1), Int(1)}, Int(0), Int(2)), kCap);
    CHECK(h0.vertices == std::vector<Point>{pt({0, 0})});

    // x + y = 2 (mod 3): the middle solution (1,1) is not extreme
    IntegerHull h2 = congruence_hull_vertices(
        CongruenceInstance({Int(1), Int(1)}, Int(2), Int(3)), kCap);
    CHECK(h2.vertices == std::vector<Point>{pt({0, 2}), pt({2, 0})});
}

TEST_CASE("sign relaxation pieces cover the hull once the threshold holds") {
    KnapsackInstance k({Int(2), Int(3)}, Int(7)); // a0 >= 3*2
    SignRelaxation d = sign_relaxation_decomposition(k, kCap);
    CHECK(d.threshold_met);
    REQUIRE(d.pieces.size() == 3);
    CHECK(d.pieces[0].vertices == std::vector<Point>{pt({0, 0})});

    std::vector<Point> pooled;
    for (const auto& p : d.pieces)
        pooled.insert(pooled.end(), p.vertices.begin(), p.vertices.end());
    std::sort(pooled.begin(), pooled.end());
    pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
    CHECK(pooled == knapsack_hull_vertices(k, kCap).vertices);

    for (std::size_t i = 1; i < d.pieces.size(); ++i) {
        CHECK_FALSE(d.pieces[i].recession_generators.empty());
        CHECK(Int(d.pieces[i].vertices.size()) <=
              relaxed_piece_bound(2, k.a[i - 1]));
    }

    SignRelaxation below = sign_relaxation_decomposition(
        KnapsackInstance({Int(2), Int(3)}, Int(5)), kCap);
    CHECK_FALSE(below.threshold_met);
}

TEST_CASE("standard-form hull embeds a bounded system") {
    IntegerHull h = standard_form_hull_vertices(box2(1), kCap);
    CHECK(h.dim == 8); // 2n + m
    CHECK(h.vertices.size() == 4);
    REQUIRE(h.recession_generators.size() == 2);
    CHECK(h.recession_generators[0] == pt({0, 1, 0, 1, 0, 0, 0, 0}));
    CHECK(h.recession_generators[1] == pt({1, 0, 1, 0, 0, 0, 0, 0}));

    // each vertex is (x+, x-, b - Ax) for some integer point x of the box
    for (const auto& v : h.vertices) {
        Int x = v[0] - v[2], y = v[1] - v[3];
        CHECK(x >= 0);
        CHECK(x <= 1);
        CHECK(y >= 0);
        CHECK(y <= 1);
        CHECK(v[4] == x);      // slack of -x <= 0
        CHECK(v[5] == y);      // slack of -y <= 0
        CHECK(v[6] == 1 - x);  // slack of x <= 1
        CHECK(v[7] == 1 - y);  // slack of y <= 1
    }
}

TEST_CASE("facet counts in dimensions two and three") {
    CHECK(facet_count(integer_hull_vertices(box2(4), kCap)) == 4);

    LinearSystem tri(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, {Int(0), Int(0), Int(3)});
    CHECK(facet_count(integer_hull_vertices(tri, kCap)) == 3);

    IntMatrix cube_rows(6, 3);
    std::vector<Int> cube_rhs(6);
    for (std::size_t j = 0; j < 3; ++j) {
        cube_rows(j, j) = -1;
        cube_rows(3 + j, j) = 1;
        cube_rhs[3 + j] = 1;
    }
    IntegerHull cube = integer_hull_vertices(LinearSystem(cube_rows, cube_rhs), kCap);
    CHECK(cube.vertices.size() == 8);
    CHECK(facet_count(cube) == 6);

    LinearSystem tet(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}},
                     {Int(0), Int(0), Int(0), Int(1)});
    CHECK(facet_count(integer_hull_vertices(tet, kCap)) == 4);

    IntMatrix oct_rows(8, 3);
    std::vector<Int> oct_rhs(8, Int(1));
    for (std::size_t r = 0; r < 8; ++r) {
        oct_rows(r, 0) = (r & 1) ? -1 : 1;
        oct_rows(r, 1) = (r & 2) ? -1 : 1;
        oct_rows(r, 2) = (r & 4) ? -1 : 1;
    }
    IntegerHull oct = integer_hull_vertices(LinearSystem(oct_rows, oct_rhs), kCap);
    CHECK(oct.vertices.size() == 6);
    CHECK(facet_count(oct) == 8);
}

TEST_CASE("facet counting rejects unsuitable hulls") {
    IntegerHull unbounded = congruence_hull_vertices(
        CongruenceInstance({Int(1), Int(1)}, Int(1), Int(2)), kCap);
    CHECK_THROWS_AS(facet_count(unbounded), DomainError);

    // coplanar points in 3-space are not full-dimensional
    LinearSystem flat(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0},
                                {0, 0, 1}, {0, 0, -1}},
                      {Int(0), Int(0), Int(1), Int(1), Int(0), Int(0)});
    CHECK_THROWS_AS(facet_count(integer_hull_vertices(flat, kCap)), DomainError);
}

TEST_CASE("coordinatewise separation of point pairs") {
    CHECK(separating_coordinate(pt({1, 5}), pt({4, 2})).has_value());
    CHECK_FALSE(separating_coordinate(pt({2, 3}), pt({3, 4})).has_value());
    CHECK(separating_coordinate(pt({0, 1}), pt({1, 0})).has_value());
    CHECK_THROWS_AS(separating_coordinate(pt({1}), pt({1, 2})), DomainError);

    SeparationCheck ok = has_separation_property({pt({0, 4}), pt({4, 0}), pt({1, 2})});
    CHECK(ok.holds);
    CHECK_THROWS_AS(has_separation_property({pt({-1, 0}), pt({0, 0})}), DomainError);

    SeparationCheck bad = has_separation_property({pt({2, 3}), pt({3, 2})});
    CHECK_FALSE(bad.holds);
    CHECK(bad.x == pt({2, 3}));
    CHECK(bad.y == pt({3, 2}));
}

TEST_CASE("hull vertices match the per-point membership oracle") {
    auto systems = random_bounded_systems(2, 3, 6, Int(4), Int(6), 12, 5150, false);
    for (const auto& sys : systems) {
        auto pts = enumerate_integer_points(sys, kCap);
        if (pts.size() > 400) continue;
        CHECK(integer_hull_vertices(sys, kCap).vertices ==
              oracles::lp_vertex_oracle(pts, {}));
    }
}
