#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "waring/json_io.hpp"
#include "waring/rank.hpp"

using namespace waring;
using testutil::frac;
using testutil::mono;

TEST_CASE("comma lists parse in both coefficient conventions") {
    CHECK(parse_form("2,0,-6,0", Convention::monomial) == mono({2, 0, -6, 0}));
    CHECK(parse_form("1, 0, 0, 0, 1", Convention::monomial) == mono({1, 0, 0, 0, 1}));
    // scaled coefficients: 1,1,1,1,1 expands to the pure power (x+y)^4
    CHECK(parse_form("1,1,1,1,1", Convention::binomial) == mono({1, 4, 6, 4, 1}));
    CHECK(parse_form("-1/2, 3/4", Convention::monomial) == BinaryForm::from_monomial({frac(-1, 2), frac(3, 4)}));
}

TEST_CASE("json documents parse and may override the convention") {
    BinaryForm f = parse_form(R"({"coefficients": ["1", "0", "0", "1"]})", Convention::monomial);
    CHECK(f == mono({1, 0, 0, 1}));
    BinaryForm g =
        parse_form(R"({"coefficients": ["1", "1", "1", "1"], "convention": "binomial"})", Convention::monomial);
    CHECK(g == mono({1, 3, 3, 1}));
    BinaryForm h = parse_form(R"({"coefficients": ["1", "2", "1"], "degree": 2})", Convention::monomial);
    CHECK(h == mono({1, 2, 1}));
}

TEST_CASE("malformed inputs are rejected with parse errors") {
    CHECK_THROWS_AS(parse_form("1", Convention::monomial), parse_error);
    CHECK_THROWS_AS(parse_form("1,,2", Convention::monomial), parse_error);
    CHECK_THROWS_AS(parse_form("1,two,3", Convention::monomial), parse_error);
    CHECK_THROWS_AS(parse_form(R"({"coefficients": ["1","0","1"], "degree": 3})", Convention::monomial),
                    parse_error);
    CHECK_THROWS_AS(parse_form(R"({"convention": "monomial"})", Convention::monomial), parse_error);
    CHECK_THROWS_AS(parse_form(R"({"coefficients": ["1","0","1"], "convention": "weird"})", Convention::monomial),
                    parse_error);
}

TEST_CASE("floating literals are gated behind an explicit opt-in") {
    CHECK_THROWS_AS(parse_form("1.5, 0, 1", Convention::monomial), parse_error);
    BinaryForm f = parse_form("1.5, 0, 1", Convention::monomial, /*allow_float=*/true);
    CHECK(f == BinaryForm::from_monomial({frac(3, 2), Rational(0), Rational(1)}));
    CHECK(parse_form("0.1, 1", Convention::monomial, true).monomial(0) == rational_from_double(0.1));
    // scientific notation needs the same opt-in
    CHECK_THROWS_AS(parse_form("1e2, 1", Convention::monomial), parse_error);
    CHECK(parse_form("1e2, 1", Convention::monomial, true) == mono({100, 1}));
    // rationals never need it
    CHECK(parse_form("1/2, 1", Convention::monomial) ==
          BinaryForm::from_monomial({frac(1, 2), Rational(1)}));
}

TEST_CASE("serialized values keep exact arithmetic readable") {
    CHECK(to_json(frac(-3, 2)) == "-3/2");
    json g = to_json(GaussianRational(frac(1, 2), Rational(-2)));
    CHECK(g["re"] == "1/2");
    CHECK(g["im"] == "-2");
    json m = to_json(MobiusTransform{Rational(1), frac(-1, 3), Rational(0), Rational(2)});
    REQUIRE(m.is_array());
    CHECK(m[0][1] == "-1/3");
    CHECK(m[1][1] == "2");
}

TEST_CASE("rank results serialize with a stable schema") {
    RankResult r = real_rank(mono({2, 0, -6, 0}), /*want_witness=*/true);
    json out = to_json(r);
    CHECK(out["status"] == "classified");
    CHECK(out["real_rank"] == 3);
    CHECK(out["complex_rank"] == 2);
    CHECK(out["certificate"] == "delta-sign");
    REQUIRE(out.contains("witness"));
    CHECK(out["witness"]["rank"] == 3);
    CHECK(out["witness"]["field"] == "real");
    CHECK(out["witness"]["terms"].size() == 3);

    RankResult b = real_rank(mono({1, 0, 0, 0, 0, 1}));
    json bj = to_json(b);
    CHECK(bj["status"] == "boundary");
    CHECK_FALSE(bj.contains("real_rank"));
    CHECK(bj["complex_rank"] == 2);
    CHECK(bj["note"].get<std::string>().size() > 0);
}

TEST_CASE("error payloads carry a code and a message") {
    json e = error_json("parse_error", "unreadable coefficient");
    CHECK(e["error"] == "parse_error");
    CHECK(e["message"] == "unreadable coefficient");
}
