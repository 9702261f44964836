#pragma once

#include <random>
#include <set>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/mobius.hpp"
#include "waring/rational.hpp"
#include "waring/roots.hpp"

namespace waring {

/*
 * Seeded sample generators.  Everything routes through a caller-supplied
 * std::mt19937_64 so a run is reproducible from one integer seed.
 */

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return make_rational(num(rng), den(rng));
}

/* a degree-d form with integer monomial coefficients in [-bound, bound], squarefree */
inline BinaryForm random_squarefree_form(std::mt19937_64& rng, int d, int bound = 9) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    for (;;) {
        std::vector<Rational> m(d + 1);
        for (auto& c : m) c = Rational(coeff(rng));
        BinaryForm f = BinaryForm::from_monomial(m);
        if (f.is_zero() || f.degree() != d) continue;
        if (is_squarefree(f)) return f;
    }
}

/* a product of d distinct rational linear forms: d distinct real roots */
inline BinaryForm random_all_real_form(std::mt19937_64& rng, int d, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> sc(1, 5);
    for (;;) {
        std::set<Rational> roots;
        while (static_cast<int>(roots.size()) < d) roots.insert(make_rational(num(rng), den(rng)));
        std::vector<std::pair<Rational, Rational>> factors;
        for (const Rational& t : roots) factors.emplace_back(Rational(1), -t);
        BinaryForm f = from_linear_factors(factors).scaled(Rational(sc(rng)));
        if (std::bernoulli_distribution(0.5)(rng)) f = f.scaled(Rational(-1));
        return f;
    }
}

/* an invertible rational fractional-linear map with small integer entries */
inline MobiusTransform random_mobius(std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<int> e(-bound, bound);
    for (;;) {
        MobiusTransform m{Rational(e(rng)), Rational(e(rng)), Rational(e(rng)), Rational(e(rng))};
        if (m.det() != 0) return m;
    }
}

}  // namespace waring
