#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "waring/binary_form.hpp"

using namespace waring;
using testutil::frac;
using testutil::mono;

TEST_CASE("monomial and scaled coefficient conventions agree") {
    // f = x^3 + 3x^2y + 3xy^2 + y^3 = (x+y)^3; scaled storage divides by C(3,i)
    BinaryForm f = mono({1, 3, 3, 1});
    CHECK(f.a(0) == 1);
    CHECK(f.a(1) == 1);
    CHECK(f.a(2) == 1);
    CHECK(f.a(3) == 1);

    BinaryForm g = BinaryForm::from_binomial({Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(f == g);
    CHECK(g.monomial(1) == 3);
}

TEST_CASE("evaluation and degree bookkeeping") {
    BinaryForm f = mono({2, 0, -6, 0});
    CHECK(f.degree() == 3);
    CHECK(f.eval(Rational(1), Rational(1)) == -4);
    CHECK(f.eval(Rational(1), Rational(0)) == 2);
    CHECK(f.eval(Rational(0), Rational(1)) == 0);  // root at (0:1)
    CHECK_FALSE(f.is_zero());
}

TEST_CASE("linear factor products and powers") {
    BinaryForm cube = pow_linear(Rational(1), Rational(2), 3);  // (x+2y)^3
    CHECK(cube.monomial(0) == 1);
    CHECK(cube.monomial(1) == 6);
    CHECK(cube.monomial(2) == 12);
    CHECK(cube.monomial(3) == 8);

    BinaryForm prod = from_linear_factors({{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}});
    CHECK(prod == mono({1, 0, -1}));  // (x-y)(x+y)
}

TEST_CASE("dehomogenization tracks the root at infinity") {
    // monomial(i) multiplies x^(d-i) y^i, so the multiplicity of (1:0) is the
    // number of leading zero coefficients, i.e. the power of y dividing f.
    CHECK(mono({1, 0, -1}).infinity_multiplicity() == 0);
    CHECK(mono({0, 1, 0, 0}).infinity_multiplicity() == 1);  // x^2 y
    CHECK(mono({0, 0, 1, 0}).infinity_multiplicity() == 2);  // x y^2
    CHECK(mono({0, 1, 1}).infinity_multiplicity() == 1);     // y(x+y)
}

TEST_CASE("arithmetic helpers") {
    BinaryForm f = mono({1, 0, -1});
    BinaryForm g = mono({0, 1, 0});
    CHECK(add(f, g) == mono({1, 1, -1}));
    CHECK(sub(f, g) == mono({1, -1, -1}));
    CHECK(mul(mono({1, 1}), mono({1, -1})) == mono({1, 0, -1}));
    CHECK(f.scaled(Rational(3)) == mono({3, 0, -3}));
    CHECK(proportional(f, f.scaled(frac(-7, 2))));
    CHECK_FALSE(proportional(f, g));
}

TEST_CASE("directional derivative") {
    // d/dx (x^3 - 3xy^2) = 3x^2 - 3y^2
    BinaryForm f = mono({1, 0, -3, 0});
    CHECK(polar_derivative(f, Rational(1), Rational(0)) == mono({3, 0, -3}));
    // d/dy picks up the mixed term: -6xy
    CHECK(polar_derivative(f, Rational(0), Rational(1)) == mono({0, -6, 0}));
}

TEST_CASE("pretty printer emits something readable") {
    CHECK_FALSE(mono({2, 0, -6, 0}).pretty().empty());
}
