#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "waring/apolarity.hpp"
#include "waring/randomgen.hpp"

using namespace waring;
using testutil::mono;
using testutil::reconstruction_deviation;

TEST_CASE("catalecticant shape and the pinned kernel") {
    BinaryForm f = mono({2, 0, -6, 0});
    Catalecticant c = catalecticant(f, 2);
    CHECK(c.rows() == 2);
    CHECK(c.cols() == 3);

    auto kernel = apolar_kernel(f, 2);
    REQUIRE(kernel.size() == 1);
    // the annihilator must actually kill f
    CHECK(apply_operator(kernel[0], f).is_zero());
}

TEST_CASE("power annihilation: a direction kills its own power") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 25; ++n) {
        Rational p = random_rational(rng), q = random_rational(rng);
        if (p == 0 && q == 0) continue;
        for (int d = 2; d <= 5; ++d) {
            BinaryForm power = pow_linear(p, q, d);
            // (q X - p Y) annihilates (p x + q y)^d
            BinaryForm op = BinaryForm::from_monomial({q, -p});
            CHECK(apply_operator(op, power).is_zero());
        }
    }
}

TEST_CASE("operator application drops degree correctly") {
    BinaryForm f = mono({1, 0, 0, 0, 0, 1});  // x^5 + y^5
    BinaryForm dx = BinaryForm::from_monomial({Rational(1), Rational(0)});
    BinaryForm fx = apply_operator(dx, f);
    CHECK(fx.degree() == 4);
    CHECK(fx == mono({5, 0, 0, 0, 0}));
}

TEST_CASE("quintic kernel cubic matches the frozen transcript") {
    BinaryForm f = mono({1, 5, -10, 20, 5, -7});
    BinaryForm g = quintic_kernel_cubic(f);
    REQUIRE(g.degree() == 3);
    CHECK(g.monomial(0) == -20);
    CHECK(g.monomial(1) == 15);
    CHECK(g.monomial(2) == 13);
    CHECK(g.monomial(3) == 9);
    // and it annihilates f, being the kernel generator at level 3
    CHECK(apply_operator(g, f).is_zero());
}

TEST_CASE("kernel cubic vanishes exactly when the catalecticant drops rank") {
    BinaryForm degenerate = mono({1, 0, 0, 0, 0, 1});  // x^5 + y^5 has rank-2 catalecticant
    CHECK(quintic_kernel_cubic(degenerate).is_zero());
    BinaryForm generic = mono({1, 5, -10, 20, 5, -7});
    CHECK_FALSE(quintic_kernel_cubic(generic).is_zero());
}

TEST_CASE("pinned decomposition: the cubic with complex rank two") {
    BinaryForm f = mono({2, 0, -6, 0});

    Decomposition over_c = sylvester_decompose(f, Field::complex);
    CHECK(over_c.rank() == 2);
    CHECK(over_c.exact);
    CHECK(over_c.residual == 0.0);
    CHECK(reconstruction_deviation(f, over_c) < 1e-12);

    Decomposition over_r = sylvester_decompose(f, Field::real);
    CHECK(over_r.rank() == 3);
    CHECK(over_r.exact);
    CHECK(reconstruction_deviation(f, over_r) < 1e-12);
    for (const auto& t : over_r.terms) {
        CHECK(t.c_exact.is_real());
        CHECK(t.l0_exact.is_real());
        CHECK(t.l1_exact.is_real());
    }
}

TEST_CASE("pinned decomposition: xy splits over opposite diagonals") {
    BinaryForm f = mono({0, 1, 0});
    Decomposition dec = sylvester_decompose(f, Field::real);
    CHECK(dec.rank() == 2);
    CHECK(dec.exact);
    CHECK(reconstruction_deviation(f, dec) < 1e-12);
}

TEST_CASE("pure powers collapse to rank one") {
    BinaryForm f = pow_linear(Rational(1), Rational(2), 5);  // (x+2y)^5
    Decomposition dec = sylvester_decompose(f, Field::real);
    REQUIRE(dec.rank() == 1);
    CHECK(dec.exact);
    CHECK(reconstruction_deviation(f, dec) < 1e-12);
}

TEST_CASE("binomial power sums have complex rank two") {
    BinaryForm f = mono({1, 0, 0, 0, 0, 1});  // x^5 + y^5
    Decomposition dec = sylvester_decompose(f, Field::complex);
    CHECK(dec.rank() == 2);
    CHECK(reconstruction_deviation(f, dec) < 1e-9);
}

TEST_CASE("non-squarefree forms beyond pure powers are refused") {
    BinaryForm f = mul(mono({1, -1}), mul(mono({1, -1}), mono({1, 2})));
    CHECK_THROWS_AS(sylvester_decompose(f, Field::real), squarefree_error);
}

TEST_CASE("exact max-rank construction on pinned inputs") {
    BinaryForm xy = mono({0, 1, 0});
    Decomposition dec = construct_rank_d_decomposition(xy);
    CHECK(dec.rank() == 2);
    CHECK(dec.exact);
    CHECK(dec.residual == 0.0);
    CHECK(reconstruction_deviation(xy, dec) < 1e-12);
}

TEST_CASE("random all-real forms decompose exactly at rank d") {
    std::mt19937_64 rng(99);
    for (int d = 2; d <= 5; ++d) {
        for (int n = 0; n < 20; ++n) {
            BinaryForm f = random_all_real_form(rng, d);
            Decomposition dec = construct_rank_d_decomposition(f);
            CHECK(dec.rank() <= d);
            CHECK(dec.exact);
            CHECK(reconstruction_deviation(f, dec) < 1e-12);
        }
    }
}

TEST_CASE("random squarefree forms: real decomposition is sound") {
    std::mt19937_64 rng(2024);
    for (int d = 2; d <= 5; ++d) {
        for (int n = 0; n < 15; ++n) {
            BinaryForm f = random_squarefree_form(rng, d);
            Decomposition dec = sylvester_decompose(f, Field::real);
            CHECK(dec.rank() <= d);
            CHECK(reconstruction_deviation(f, dec) < 1e-9);
        }
    }
}

TEST_CASE("random squarefree forms: complex rank never exceeds real rank") {
    std::mt19937_64 rng(31337);
    for (int d = 3; d <= 5; ++d) {
        for (int n = 0; n < 10; ++n) {
            BinaryForm f = random_squarefree_form(rng, d);
            Decomposition c = sylvester_decompose(f, Field::complex);
            Decomposition r = sylvester_decompose(f, Field::real);
            CHECK(c.rank() <= r.rank());
            CHECK(reconstruction_deviation(f, c) < 1e-9);
        }
    }
}
