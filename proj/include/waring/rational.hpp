#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "waring/errors.hpp"

namespace waring {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline double to_double(const Rational& q) { return q.get_d(); }

/* exact: every double is a dyadic rational */
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

inline Rational pow_rational(const Rational& q, unsigned e) {
    Rational r = 1;
    Rational base = q;
    for (unsigned k = e; k; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return r;
}

inline Int pow_int(const Int& z, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

/* "p/q", "p" or "-p/q"; no decimals, the library is exact */
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty coefficient");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw parse_error("bad coefficient '" + s + "': expected integer or p/q");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw parse_error("bad coefficient '" + s + "': expected integer or p/q");
    if (q.get_den() == 0) throw parse_error("bad coefficient '" + s + "': zero denominator");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();  // canonical "p" or "p/q"
}

/* returns true and the exact root if z is a perfect square */
inline bool sqrt_exact(const Int& z, Int& root) {
    if (z < 0) return false;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return true;
}

inline bool sqrt_exact(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Int rn, rd;
    if (!sqrt_exact(Int(q.get_num()), rn)) return false;
    if (!sqrt_exact(Int(q.get_den()), rd)) return false;
    root = make_rational(rn, rd);
    return true;
}

/* exact complex rationals; enough for quadratic-formula root extraction */
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n == 0) throw std::invalid_argument("division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}

}  // namespace waring
