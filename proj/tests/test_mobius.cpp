#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "helpers.hpp"
#include "waring/mobius.hpp"
#include "waring/randomgen.hpp"
#include "waring/rank.hpp"
#include "waring/roots.hpp"

using namespace waring;
using testutil::frac;
using testutil::mono;

TEST_CASE("identity acts trivially and composition matches sequential action") {
    std::mt19937_64 rng(22);
    for (int n = 0; n < 25; ++n) {
        BinaryForm f = random_squarefree_form(rng, 2 + int(rng() % 4));
        CHECK(act(MobiusTransform::identity(), f) == f);
        MobiusTransform m1 = random_mobius(rng), m2 = random_mobius(rng);
        CHECK(act(m2, act(m1, f)) == act(compose(m2, m1), f));
    }
}

TEST_CASE("inverse undoes the action up to overall scale") {
    std::mt19937_64 rng(33);
    for (int n = 0; n < 25; ++n) {
        BinaryForm f = random_squarefree_form(rng, 2 + int(rng() % 4));
        MobiusTransform m = random_mobius(rng);
        BinaryForm back = act(m.inverse(), act(m, f));
        CHECK(proportional(back, f));
    }
    MobiusTransform singular{Rational(1), Rational(2), Rational(2), Rational(4)};
    CHECK_THROWS_AS(singular.inverse(), std::invalid_argument);
}

TEST_CASE("point map conventions at infinity and at poles") {
    MobiusTransform m{Rational(2), Rational(1), Rational(1), Rational(-3)};  // z -> (2z+1)/(z-3)
    auto img = apply(m, {1.0, 0.0});
    CHECK(img.real() == Catch::Approx(-1.5));
    auto at_pole = apply(m, {3.0, 0.0});
    CHECK(std::isinf(at_pole.real()));
    auto at_inf = apply(m, {std::numeric_limits<double>::infinity(), 0.0});
    CHECK(at_inf.real() == Catch::Approx(2.0));
    MobiusTransform affine{Rational(1), Rational(5), Rational(0), Rational(1)};
    auto still_inf = apply(affine, {std::numeric_limits<double>::infinity(), 0.0});
    CHECK(std::isinf(still_inf.real()));
}

TEST_CASE("pushforward by an explicit map lands on the hand-expanded image") {
    // act swaps/realigns roots: under z -> 1/z (matrix [[0,1],[1,0]]), the form
    // x^2 - 4 y^2 (roots t = +-2) must go to a form with roots t = +-1/2.
    MobiusTransform swap{Rational(0), Rational(1), Rational(1), Rational(0)};
    BinaryForm f = mono({1, 0, -4});
    BinaryForm g = act(swap, f);
    CHECK(proportional(g, mono({-4, 0, 1})));
}

TEST_CASE("real root census is invariant under real fractional-linear maps") {
    std::mt19937_64 rng(44);
    for (int n = 0; n < 50; ++n) {
        BinaryForm f = random_squarefree_form(rng, 2 + int(rng() % 4));
        MobiusTransform m = random_mobius(rng);
        BinaryForm g = act(m, f);
        CHECK(count_real_roots(g).real_distinct == count_real_roots(f).real_distinct);
        CHECK(is_squarefree(g));
    }
}

TEST_CASE("rank classification is invariant under real fractional-linear maps") {
    std::mt19937_64 rng(55);
    for (int degree : {4, 5}) {
        int done = 0;
        while (done < 12) {
            BinaryForm f = random_squarefree_form(rng, degree);
            RankResult base = real_rank(f);
            if (base.status != RankStatus::classified) continue;
            MobiusTransform m = random_mobius(rng);
            RankResult moved = real_rank(act(m, f));
            REQUIRE(moved.status == RankStatus::classified);
            CHECK(moved.real_rank == base.real_rank);
            CHECK(moved.complex_rank == base.complex_rank);
            ++done;
        }
    }
}
