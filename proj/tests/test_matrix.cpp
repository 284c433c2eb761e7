#include "doctest.h"

#include "ihull/errors.hpp"
#include "ihull/matrix.hpp"

using namespace ihull;

TEST_CASE("matrix construction and access") {
    IntMatrix z(2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z(1, 2) == 0);
    z(1, 2) = 5;
    CHECK(z.row(1) == std::vector<Int>{0, 0, 5});

    IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m == IntMatrix::from_rows({{1, 2}, {3, 4}}));
    CHECK(m.row(0) == std::vector<Int>{1, 2});

    CHECK_THROWS_AS(IntMatrix(0, 3), DomainError);
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DomainError);
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), DomainError);
    CHECK_THROWS_AS(IntMatrix::from_rows({}), DomainError);
}

TEST_CASE("determinant on known matrices") {
    CHECK(determinant(IntMatrix{{3}}) == 3);
    CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{6, 1, 1}, {4, -2, 5}, {2, 8, 7}}) == -306);

    IntMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
    CHECK(determinant(id) == 1);

    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DomainError);
}

TEST_CASE("determinant stays exact at large magnitudes") {
    Int big = Int(1) << 100;
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(1, 1) = big;
    m(0, 1) = big - 1;
    m(1, 0) = big + 1;
    CHECK(determinant(m) == big * big - (big - 1) * (big + 1)); // exactly 1
    CHECK(determinant(m) == 1);
}

TEST_CASE("rank over the rationals") {
    CHECK(rank(IntMatrix{{1, 2}, {3, 4}}) == 2);
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix{{1, 0}, {0, 1}, {1, 1}}) == 2);
    CHECK(rank(IntMatrix{{2, 4, 6}}) == 1);
}

TEST_CASE("largest absolute minor over submatrix orders") {
    IntMatrix m{{1, 2}, {3, 4}};
    CHECK(max_abs_minor(m, 1) == 4);
    CHECK(max_abs_minor(m, 2) == 2);

    IntMatrix wide{{1, 2, 3}, {4, 5, 6}};
    CHECK(max_abs_minor(wide, 2) == 6); // |1*6 - 3*4|

    CHECK_THROWS_AS(max_abs_minor(m, 0), DomainError);
    CHECK_THROWS_AS(max_abs_minor(m, 3), DomainError);
}
