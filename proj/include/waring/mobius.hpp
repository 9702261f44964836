#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "waring/binary_form.hpp"
#include "waring/rational.hpp"

namespace waring {

/*
 * Invertible fractional-linear map z -> (p z + q) / (r z + s) with exact
 * rational entries, kept as the matrix [[p, q], [r, s]] up to scale.
 */
struct MobiusTransform {
    Rational p{1}, q{0}, r{0}, s{1};

    Rational det() const { return p * s - q * r; }

    static MobiusTransform identity() { return {}; }

    /* adjugate; inverse up to the irrelevant overall scale */
    MobiusTransform inverse() const {
        if (det() == 0) throw std::invalid_argument("singular transform has no inverse");
        return {s, -q, -r, p};
    }
};

/* matrix product: apply `first`, then `second` */
inline MobiusTransform compose(const MobiusTransform& second, const MobiusTransform& first) {
    return {second.p * first.p + second.q * first.r, second.p * first.q + second.q * first.s,
            second.r * first.p + second.s * first.r, second.r * first.q + second.s * first.s};
}

/* image of an affine point, with the usual conventions at infinity */
inline std::complex<double> apply(const MobiusTransform& m, std::complex<double> z) {
    double P = to_double(m.p), Q = to_double(m.q), R = to_double(m.r), S = to_double(m.s);
    if (std::isinf(z.real()) || std::isinf(z.imag()))
        return R != 0.0 ? std::complex<double>(P / R, 0.0)
                        : std::complex<double>(std::numeric_limits<double>::infinity(), 0.0);
    std::complex<double> den = R * z + S;
    if (den == std::complex<double>(0.0, 0.0))
        return {std::numeric_limits<double>::infinity(), 0.0};
    return (P * z + Q) / den;
}

/*
 * Push a form forward: act(m, f) = f composed with the inverse of m, so the
 * roots of the result are the m-images of the roots of f and
 * act(m2, act(m1, f)) = act(compose(m2, m1), f) exactly.
 */
inline BinaryForm act(const MobiusTransform& m, const BinaryForm& f) {
    if (m.det() == 0) throw std::invalid_argument("cannot act by a singular transform");
    int d = f.degree();
    /* f(inverse * (x, y)) with the adjugate inverse: x -> s x - q y, y -> -r x + p y */
    BinaryForm X = BinaryForm::from_monomial({m.s, -m.q});
    BinaryForm Y = BinaryForm::from_monomial({-m.r, m.p});
    std::vector<BinaryForm> xp, yp;
    BinaryForm one = BinaryForm::from_monomial({Rational(1)});
    xp.push_back(one);
    yp.push_back(one);
    for (int i = 1; i <= d; ++i) {
        xp.push_back(mul(xp.back(), X));
        yp.push_back(mul(yp.back(), Y));
    }
    std::vector<Rational> acc(d + 1, Rational(0));
    BinaryForm out = BinaryForm::from_monomial(std::move(acc));
    for (int i = 0; i <= d; ++i) {
        if (f.monomial(i) == 0) continue;
        out = add(out, mul(xp[d - i], yp[i]).scaled(f.monomial(i)));
    }
    return out;
}

}  // namespace waring
