#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/binary_form.hpp"
#include "waring/rational.hpp"

namespace testutil {

inline waring::BinaryForm mono(std::initializer_list<long> coeffs) {
    std::vector<waring::Rational> m;
    for (long c : coeffs) m.emplace_back(c);
    return waring::BinaryForm::from_monomial(m);
}

inline waring::Rational frac(long p, long q) { return waring::make_rational(p, q); }

/*
 * Independent reconstruction check: rebuild sum c_j (l0_j x + l1_j y)^d from
 * the terms alone and measure the relative max-norm gap to f.  Deliberately
 * re-derives what Decomposition::residual claims.
 */
inline double reconstruction_deviation(const waring::BinaryForm& f, const waring::Decomposition& dec) {
    int d = f.degree();
    std::vector<std::complex<double>> acc(d + 1, {0.0, 0.0});
    for (const auto& t : dec.terms) {
        std::complex<double> c = t.exact ? t.c_exact.to_complex() : t.c;
        std::complex<double> l0 = t.exact ? t.l0_exact.to_complex() : t.l0;
        std::complex<double> l1 = t.exact ? t.l1_exact.to_complex() : t.l1;
        for (int i = 0; i <= d; ++i)
            acc[i] += c * static_cast<double>(waring::binom(d, i)) * std::pow(l0, d - i) * std::pow(l1, i);
    }
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i <= d; ++i) {
        scale = std::max(scale, std::abs(waring::to_double(f.monomial(i))));
        worst = std::max(worst, std::abs(acc[i] - std::complex<double>(waring::to_double(f.monomial(i)), 0.0)));
    }
    return scale == 0.0 ? worst : worst / scale;
}

}  // namespace testutil
