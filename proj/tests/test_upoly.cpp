#include <catch2/catch_amalgamated.hpp>

#include "waring/upoly.hpp"

using namespace waring;
using namespace waring::upoly;

namespace {
UPoly poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return make(v);
}
}  // namespace

TEST_CASE("division, gcd, squarefree part") {
    UPoly a = poly({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
    UPoly b = poly({-1, 1});
    auto [q, r] = divmod(a, b);
    CHECK(is_zero(r));
    CHECK(eval(q, Rational(2)) == 0);
    CHECK(eval(q, Rational(3)) == 0);

    UPoly g = gcd(mul(a, a), a);
    CHECK(degree(g) == 3);

    UPoly sq = mul(b, mul(b, poly({-2, 1})));  // (t-1)^2 (t-2)
    UPoly sf = squarefree_part(sq);
    CHECK(degree(sf) == 2);
    CHECK(eval(sf, Rational(1)) == 0);
    CHECK(eval(sf, Rational(2)) == 0);
}

TEST_CASE("sturm root counting") {
    CHECK(count_distinct_real_roots(poly({-6, 11, -6, 1})) == 3);
    CHECK(count_distinct_real_roots(poly({1, 0, 1})) == 0);      // t^2+1
    CHECK(count_distinct_real_roots(poly({-2, 0, 1})) == 2);     // t^2-2
    CHECK(count_distinct_real_roots(poly({0, 0, 1})) == 1);      // t^2
    CHECK(count_distinct_real_roots(poly({1, 1})) == 1);
    CHECK(count_distinct_real_roots(poly({5})) == 0);
}

TEST_CASE("root isolation brackets every root") {
    UPoly p = poly({-6, 11, -6, 1});
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    for (const auto& iv : ivs) {
        if (iv.exact) {
            CHECK(eval(p, iv.root) == 0);
        } else {
            CHECK(sign(eval(p, iv.lo)) * sign(eval(p, iv.hi)) < 0);
        }
    }
    auto tight = refine(p, ivs[0], make_rational(1, 1000000));
    if (!tight.exact) CHECK(tight.hi - tight.lo <= make_rational(1, 1000000));
}

TEST_CASE("rational root extraction") {
    UPoly p = mul(poly({-1, 2}), poly({3, 1}));  // (2t-1)(t+3)
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(eval(p, make_rational(1, 2)) == 0);
    CHECK(eval(p, Rational(-3)) == 0);
    for (const auto& r : roots) CHECK(eval(p, r) == 0);
}

TEST_CASE("resultant of known pair") {
    // res(t^2-1, t^2-4) = ((1)^2-4)((-1)^2-4) = 9
    CHECK(resultant(poly({-1, 0, 1}), poly({-4, 0, 1})) == 9);
    // shared root makes it vanish
    CHECK(resultant(poly({-1, 1}), poly({-1, 0, 1})) == 0);
}

TEST_CASE("interpolation recovers a polynomial") {
    UPoly p = poly({2, -3, 5});
    std::vector<Rational> nodes{Rational(0), Rational(1), Rational(2)};
    std::vector<Rational> values;
    for (const auto& n : nodes) values.push_back(eval(p, n));
    UPoly q = interpolate(nodes, values);
    REQUIRE(degree(q) == 2);
    for (int i = 0; i <= 2; ++i) CHECK(q[i] == p[i]);
}
