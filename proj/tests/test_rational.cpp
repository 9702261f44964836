#include <catch2/catch_amalgamated.hpp>

#include "waring/rational.hpp"

using namespace waring;

TEST_CASE("rational parsing round-trips and rejects junk") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("a"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("doubles convert to exact dyadic rationals") {
    CHECK(rational_from_double(0.5) == make_rational(1, 2));
    CHECK(rational_from_double(-2.25) == make_rational(-9, 4));
    CHECK(rational_from_double(3.0) == Rational(3));
    CHECK(to_double(rational_from_double(0.1)) == 0.1);  // exact dyadic round-trip
}

TEST_CASE("exact square roots") {
    Rational r;
    REQUIRE(sqrt_exact(make_rational(9, 16), r));
    CHECK(r == make_rational(3, 4));
    CHECK_FALSE(sqrt_exact(Rational(2), r));
    CHECK_FALSE(sqrt_exact(Rational(-4), r));
    REQUIRE(sqrt_exact(Rational(0), r));
    CHECK(r == 0);
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(Rational(1), Rational(2));
    GaussianRational b(Rational(3), Rational(-1));
    GaussianRational p = a * b;
    CHECK(p.re == 5);
    CHECK(p.im == 5);
    CHECK((a + b).re == 4);
    CHECK((a - b).im == 3);
    CHECK(a.conj().im == -2);
    CHECK(a.norm() == 5);

    GaussianRational q = p / b;  // must undo the multiplication exactly
    CHECK(q.re == a.re);
    CHECK(q.im == a.im);

    GaussianRational i(Rational(0), Rational(1));
    CHECK((i * i).re == -1);
    CHECK((i * i).im == 0);
    CHECK(i.is_real() == false);
    CHECK(GaussianRational(Rational(7)).is_real());
}
