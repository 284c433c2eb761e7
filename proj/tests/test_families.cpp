#include "doctest.h"

#include <set>

#include "ihull/errors.hpp"
#include "ihull/families.hpp"
#include "ihull/hull.hpp"

using namespace ihull;

namespace {
const Int kCap = Int(1) << 24;
}

TEST_CASE("fibonacci numbers") {
    std::vector<long> want{1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (long s = 1; s <= 10; ++s) CHECK(fibonacci(s) == want[s - 1]);
    CHECK_THROWS_AS(fibonacci(0), DomainError);
}

TEST_CASE("fibonacci knapsack variants") {
    KnapsackInstance printed = rubin_instance(1, RubinVariant::as_printed);
    CHECK(printed.a == std::vector<Int>{1, 1}); // (F_2, F_1)
    CHECK(printed.a0 == 3);                     // F_3^2 - 1

    KnapsackInstance swapped = rubin_instance(1, RubinVariant::index_swapped);
    CHECK(swapped.a == std::vector<Int>{1, 2}); // (F_2, F_3)
    CHECK(swapped.a0 == 3);

    KnapsackInstance p3 = rubin_instance(3, RubinVariant::as_printed);
    CHECK(p3.a == std::vector<Int>{8, 5}); // (F_6, F_5)
    CHECK(p3.a0 == 13 * 13 - 1);
    KnapsackInstance s3 = rubin_instance(3, RubinVariant::index_swapped);
    CHECK(s3.a == std::vector<Int>{8, 13}); // (F_6, F_7)

    CHECK_THROWS_AS(rubin_instance(0, RubinVariant::as_printed), DomainError);
}

TEST_CASE("coupled sequences behind the two-variable extremal family") {
    auto seq = vs_sequences(5);
    REQUIRE(seq.size() == 5);
    CHECK(seq[0].beta == 1);
    CHECK(seq[0].gamma == 0); // not defined below s = 2
    CHECK(seq[1].beta == 2);
    CHECK(seq[1].gamma == 1);
    CHECK(seq[1].gamma_prime == 1);
    CHECK(seq[2].beta == 5);
    CHECK(seq[2].gamma == 3);
    CHECK(seq[2].gamma_prime == 4);
    CHECK(seq[3].beta == 12);
    CHECK(seq[3].gamma == 9);
    CHECK(seq[3].gamma_prime == 10);
    CHECK(seq[4].beta == 29);
    CHECK(seq[4].gamma == 22);
    CHECK(seq[4].gamma_prime == 26);
    CHECK_THROWS_AS(vs_sequences(0), DomainError);
}

TEST_CASE("beta matches the closed form over Z[sqrt 2]") {
    // (1 + sqrt 2)^s = p + q sqrt 2 and beta_s = q, kept exact in integers
    Int p(1), q(0);
    auto seq = vs_sequences(20);
    for (long s = 1; s <= 20; ++s) {
        Int np = p + 2 * q, nq = p + q; // multiply by (1 + sqrt 2)
        p = np;
        q = nq;
        CHECK(seq[static_cast<std::size_t>(s - 1)].beta == q);
    }
}

TEST_CASE("extremal two-variable instances") {
    VSInstance s2 = vs_extremal_instance(2);
    CHECK(s2.a == 1);
    CHECK(s2.b == 2);
    CHECK(s2.c == 3);

    VSInstance s3 = vs_extremal_instance(3);
    CHECK(s3.a == 2);
    CHECK(s3.b == 5);
    CHECK(s3.c == 23);

    VSInstance s4 = vs_extremal_instance(4);
    CHECK(s4.a == 5);
    CHECK(s4.b == 12);
    CHECK(s4.c == 153); // gamma_4 * (beta_3 + beta_4)

    CHECK(knapsack_hull_vertices(s2.knapsack(), kCap).vertices.size() == 4);
    CHECK_THROWS_AS(vs_extremal_instance(1), DomainError);
}

TEST_CASE("power-of-two knapsacks") {
    KnapsackInstance k1 = power_of_two_knapsack(1);
    CHECK(k1.a == std::vector<Int>{1});
    CHECK(k1.a0 == 1);

    KnapsackInstance k3 = power_of_two_knapsack(3);
    CHECK(k3.a == std::vector<Int>{4, 2, 1});
    CHECK(k3.a0 == 7);

    CHECK_THROWS_AS(power_of_two_knapsack(0), DomainError);
}

TEST_CASE("three-variable family rows scale polynomial roots") {
    const unsigned p = 32;
    LinearSystem s = morgan_family(Int(5), p);
    REQUIRE(s.rows() == 5);
    REQUIRE(s.cols() == 3);
    Int scale = Int(1) << p;

    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(s.A(j, j) == -1);
        CHECK(s.b[j] == 0);
    }
    CHECK(s.A(3, 0) == scale);
    CHECK(s.A(4, 0) == scale);
    CHECK(s.b[3] == 5 * scale);
    CHECK(s.b[4] == 5 * scale);
    CHECK(s.A(3, 2) == s.A(4, 1)); // the middle root appears in both rows

    // each scaled coefficient approximates a root of t^3 + t^2 - 2t - 1
    for (const Int& coeff : {s.A(3, 1), s.A(3, 2), s.A(4, 2)}) {
        Rat t = make_rat(coeff, scale);
        Rat res = t * t * t + t * t - 2 * t - 1;
        if (res < 0) res = -res;
        CHECK(res < make_rat(Int(1), Int(1) << 27));
    }

    // distinct roots, with the signs of 2cos(2pi/7), 2cos(4pi/7), 2cos(6pi/7)
    CHECK(s.A(3, 1) < 0);      // most negative root
    CHECK(s.A(3, 2) > 0);      // positive root
    CHECK(s.A(4, 2) < 0);
    CHECK(s.A(3, 1) < s.A(4, 2));

    CHECK_THROWS_AS(morgan_family(Int(0), 32), DomainError);
    CHECK_THROWS_AS(morgan_family(Int(4), 1), DomainError);
}

TEST_CASE("congruence ensemble decoding") {
    CongruenceEnsemble e(2, Int(4));
    CHECK(e.size() == 16);

    CongruenceInstance first = e.at(Int(0));
    CHECK(first.a == std::vector<Int>{0, 1});
    CHECK(first.a0 == 0);

    CongruenceInstance mid = e.at(Int(5));
    CHECK(mid.a == std::vector<Int>{1, 1});
    CHECK(mid.a0 == 1);

    std::set<std::pair<std::vector<Int>, Int>> seen;
    for (Int i = 0; i < e.size(); ++i) {
        CongruenceInstance c = e.at(i);
        CHECK(c.delta == 4);
        CHECK(c.a.back() == 1);
        seen.insert({c.a, c.a0});
    }
    CHECK(seen.size() == 16);

    CongruenceEnsemble one(1, Int(5));
    CHECK(one.size() == 5);
    CHECK(one.at(Int(3)).a == std::vector<Int>{1});

    CHECK_THROWS_AS(e.at(Int(16)), DomainError);
    CHECK_THROWS_AS(e.at(Int(-1)), DomainError);
    CHECK_THROWS_AS(CongruenceEnsemble(2, Int(1)), DomainError);
}

TEST_CASE("knapsack ensemble decoding") {
    KnapsackEnsemble e(2, Int(3));
    CHECK(e.size() == 9);

    KnapsackInstance first = e.at(Int(0));
    CHECK(first.a == std::vector<Int>{0, 3});
    CHECK(first.a0 == 6); // gamma * (gamma - 1)
    CHECK(first.relaxed);

    KnapsackInstance last = e.at(Int(8));
    CHECK(last.a == std::vector<Int>{2, 3});
    CHECK(last.a0 == 8); // gamma^2 - 1
    // every member is in relaxed form, zero weights or not
    CHECK(last.relaxed);

    std::set<std::pair<std::vector<Int>, Int>> seen;
    for (Int i = 0; i < e.size(); ++i) {
        KnapsackInstance k = e.at(i);
        CHECK(k.a.back() == 3);
        CHECK(k.a0 >= 6);
        CHECK(k.a0 <= 8);
        seen.insert({k.a, k.a0});
    }
    CHECK(seen.size() == 9);

    CHECK_THROWS_AS(e.at(Int(9)), DomainError);
    CHECK_THROWS_AS(KnapsackEnsemble(2, Int(1)), DomainError);
}

TEST_CASE("index sampling is reproducible and in range") {
    auto a = sample_indices(Int(1000), 50, 7);
    auto b = sample_indices(Int(1000), 50, 7);
    CHECK(a == b);
    CHECK(a.size() == 50);
    for (const Int& i : a) {
        CHECK(i >= 0);
        CHECK(i < 1000);
    }
    CHECK(sample_indices(Int(1000), 50, 8) != a);

    CHECK_THROWS_AS(sample_indices(Int(0), 5, 1), DomainError);
    CHECK_THROWS_AS(sample_indices(Int(1) << 70, 5, 1), DomainError);
}

TEST_CASE("minimum-b table under caps") {
    auto table = min_b_search(5, Int(12), Int(12), Int(400));
    REQUIRE(table.size() == 4);
    std::vector<long> want_b{1, 1, 2, 3};
    for (std::size_t i = 0; i < table.size(); ++i) {
        const MinBEntry& e = table[i];
        CHECK(e.s == static_cast<long>(i) + 2);
        CHECK(e.found);
        CHECK(e.b == want_b[i]);
        CHECK_FALSE(e.witness_c_at_cap);

        // the recorded witness really attains s vertices
        KnapsackInstance w({e.a, e.b}, e.c);
        CHECK(Int(knapsack_hull_vertices(w, kCap).vertices.size()) >= e.s);
    }
    CHECK(table[3].a == 2);
    CHECK(table[3].c == 11);

    CHECK_THROWS_AS(min_b_search(1, Int(5), Int(5), Int(5)), DomainError);
    CHECK_THROWS_AS(min_b_search(3, Int(0), Int(5), Int(5)), DomainError);
}
