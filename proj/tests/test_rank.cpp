#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "waring/invariants.hpp"
#include "waring/randomgen.hpp"
#include "waring/rank.hpp"

using namespace waring;
using testutil::mono;
using testutil::reconstruction_deviation;

TEST_CASE("the pinned cubic: real three, complex two") {
    RankResult r = real_rank(mono({2, 0, -6, 0}), /*want_witness=*/true);
    REQUIRE(r.status == RankStatus::classified);
    CHECK(*r.real_rank == 3);
    CHECK(*r.complex_rank == 2);
    CHECK(r.certificate == "delta-sign");
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->rank() == 3);
    CHECK(reconstruction_deviation(mono({2, 0, -6, 0}), *r.witness) < 1e-9);
}

TEST_CASE("degree two is always rank two") {
    for (auto f : {mono({1, 0, 1}), mono({1, 0, -1}), mono({1, 1, 1})}) {
        RankResult r = real_rank(f);
        CHECK(*r.real_rank == 2);
        CHECK(*r.complex_rank == 2);
    }
}

TEST_CASE("cubic dichotomy by the degree-three gate") {
    RankResult sum_of_cubes = real_rank(mono({1, 0, 0, 1}));  // x^3+y^3: negative gate
    CHECK(*sum_of_cubes.real_rank == 2);
    CHECK(*sum_of_cubes.complex_rank == 2);

    RankResult three_lines = real_rank(mono({1, 0, -1, 0}));  // x(x-y)(x+y): positive gate
    CHECK(*three_lines.real_rank == 3);
    CHECK(*three_lines.complex_rank == 2);
}

TEST_CASE("quartic rule: four real roots force rank four") {
    RankResult no_real = real_rank(mono({1, 0, 0, 0, 1}));  // x^4+y^4
    CHECK(*no_real.real_rank == 3);
    CHECK(no_real.certificate == "root-count");

    RankResult two_real = real_rank(mono({1, 0, -1, 0, -2}));  // (x^2+y^2)(x^2-2y^2)
    CHECK(*two_real.real_rank == 3);

    RankResult four_real = real_rank(mono({1, 0, -5, 0, 4}));  // (x^2-y^2)(x^2-4y^2)
    CHECK(*four_real.real_rank == 4);
}

TEST_CASE("the frozen quintic classifies as rank four") {
    BinaryForm f = mono({1, 5, -10, 20, 5, -7});
    RankResult r = real_rank(f, /*want_witness=*/true);
    REQUIRE(r.status == RankStatus::classified);
    CHECK(*r.real_rank == 4);
    CHECK(r.certificate == "I12-sign");
    CHECK(*r.complex_rank == 3);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->rank() == 4);
    CHECK(reconstruction_deviation(f, *r.witness) < 1e-9);
}

TEST_CASE("quintic family members follow the invariant sign") {
    // (a, b) = (0, 2): positive invariant, one real root, rank three
    BinaryForm f = quintic_family(Rational(0), Rational(2));
    REQUIRE(I12_sign(Rational(0), Rational(2)) > 0);
    RankResult r = real_rank(f);
    CHECK(*r.real_rank == 3);

    // all-real quintics are rank five regardless of any invariant
    std::mt19937_64 rng(5);
    BinaryForm g = random_all_real_form(rng, 5);
    RankResult rr = real_rank(g);
    CHECK(*rr.real_rank == 5);
    CHECK(rr.certificate == "root-count");
}

TEST_CASE("degenerate quintics land on the boundary, never a fake rank") {
    BinaryForm f = mono({1, 0, 0, 0, 0, 1});  // x^5+y^5: kernel cubic vanishes
    RankResult r = real_rank(f);
    CHECK(r.status == RankStatus::boundary);
    CHECK_FALSE(r.real_rank.has_value());
    CHECK(*r.complex_rank == 2);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("non-squarefree input is refused loudly") {
    CHECK_THROWS_AS(real_rank(mono({1, 2, 1})), squarefree_error);       // (x+y)^2
    CHECK_THROWS_AS(real_rank(mono({1, 0, 0, 0, 0, 0})), squarefree_error);  // x^5
}

TEST_CASE("complex rank drops below the generic value only with structure") {
    CHECK(complex_rank(mono({1, 0, 0, 0, 0, 1})) == 2);  // x^5+y^5
    CHECK(complex_rank(pow_linear(Rational(1), Rational(1), 5)) == 1);
    CHECK(complex_rank(mono({2, 0, -6, 0})) == 2);
    CHECK(complex_rank(mono({1, 5, -10, 20, 5, -7})) == 3);
}

TEST_CASE("degree one and high degrees go through the fallback") {
    RankResult linear = real_rank(mono({3, 7}));
    CHECK(*linear.real_rank == 1);

    // harmonic sextic: six real directions, so the all-real rule settles it
    RankResult h = real_rank(mono({1, 0, -15, 0, 15, 0, -1}));
    REQUIRE(h.status == RankStatus::classified);
    CHECK(*h.real_rank == 6);

    // x^6 + y^6 is annihilated by the mixed second derivative: rank two
    RankResult binom6 = real_rank(mono({1, 0, 0, 0, 0, 0, 1}));
    REQUIRE(binom6.status == RankStatus::classified);
    CHECK(*binom6.real_rank == 2);
    CHECK(binom6.certificate == "kernel-splitting");
}

TEST_CASE("sub-generic lower bound") {
    // x^6+y^6: complex rank 2, splitting annihilator, attained bound 2
    RankBound b1 = real_rank_lower_bound(mono({1, 0, 0, 0, 0, 0, 1}));
    CHECK(b1.bound == 2);
    CHECK(b1.attained);

    // x^5+y^5 over the reals: one real direction only; annihilator XY still splits
    RankBound b2 = real_rank_lower_bound(mono({1, 0, 0, 0, 0, 1}));
    CHECK(b2.bound == 2);
    CHECK(b2.attained);
}

TEST_CASE("random squarefree forms: the classifier is total for degree up to five") {
    std::mt19937_64 rng(424242);
    for (int d = 2; d <= 5; ++d) {
        for (int n = 0; n < 30; ++n) {
            BinaryForm f = random_squarefree_form(rng, d);
            RankResult r = real_rank(f);
            if (r.status != RankStatus::classified) continue;  // measure-zero boundary hits
            REQUIRE(r.real_rank.has_value());
            REQUIRE(r.complex_rank.has_value());
            CHECK(*r.complex_rank <= *r.real_rank);
            CHECK(*r.real_rank <= d);
            CHECK(*r.real_rank >= 1);
            CHECK_FALSE(r.certificate.empty());
        }
    }
}
