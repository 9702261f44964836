#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waring/rational.hpp"
#include "waring/upoly.hpp"

namespace waring {

/*
 * Conventions, fixed here once for the whole library:
 *
 *   - a form of degree d is stored through its binomial coordinates a_0..a_d,
 *         f(x,y) = sum_i C(d,i) * a_i * x^(d-i) * y^i,
 *     because catalecticant matrices and apolarity pairings are Hankel in these
 *     coordinates.  Plain monomial coefficients m_i = C(d,i) * a_i are the
 *     default on the command line and available through monomial().
 *   - dehomogenization is f(x,1); the point (1:0) corresponds to the root "at
 *     infinity" of the dehomogenized polynomial and is always accounted for
 *     separately (its multiplicity is d minus the dehomogenized degree).
 *   - discriminant signs follow the classical resultant normalization, so for
 *     d = 2 and d = 3 the discriminant is positive exactly when all roots are
 *     real and distinct.  cubic_delta (see roots.hpp) is the degree-4 invariant
 *     with cubic_delta = disc/27 on binomial coordinates; same sign rule.
 */

inline long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class BinaryForm {
  public:
    BinaryForm() = default;

    static BinaryForm from_binomial(std::vector<Rational> a) {
        if (a.empty()) throw std::invalid_argument("form needs at least one coefficient");
        BinaryForm f;
        f.degree_ = static_cast<int>(a.size()) - 1;
        f.a_ = std::move(a);
        return f;
    }

    static BinaryForm from_monomial(std::vector<Rational> m) {
        if (m.empty()) throw std::invalid_argument("form needs at least one coefficient");
        int d = static_cast<int>(m.size()) - 1;
        for (int i = 0; i <= d; ++i) m[i] /= Rational(binom(d, i));
        return from_binomial(std::move(m));
    }

    int degree() const { return degree_; }
    const Rational& a(int i) const { return a_[i]; }
    const std::vector<Rational>& binomial_coords() const { return a_; }
    Rational monomial(int i) const { return a_[i] * Rational(binom(degree_, i)); }

    std::vector<Rational> monomial_coords() const {
        std::vector<Rational> m(a_.size());
        for (int i = 0; i <= degree_; ++i) m[i] = monomial(i);
        return m;
    }

    bool is_zero() const {
        for (const auto& q : a_)
            if (q != 0) return false;
        return true;
    }

    /* f(x,1) as a univariate polynomial; degree drops by the multiplicity of (1:0) */
    UPoly dehomogenized() const {
        UPoly p(degree_ + 1);
        for (int i = 0; i <= degree_; ++i) p[degree_ - i] = monomial(i);
        upoly::prune(p);
        return p;
    }

    /* multiplicity of the root (1:0); form must be nonzero */
    int infinity_multiplicity() const {
        if (is_zero()) throw std::invalid_argument("zero form has no roots");
        return degree_ - upoly::degree(dehomogenized());
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational r = 0, xp = 1;
        std::vector<Rational> yp(degree_ + 1);
        yp[degree_] = 1;
        for (int i = degree_ - 1; i >= 0; --i) yp[i] = yp[i + 1] * y;
        /* sum m_i x^(d-i) y^i, Horner-free but exact and small */
        for (int i = degree_; i >= 0; --i) {
            r += monomial(i) * xp * yp[degree_ - i];
            xp *= x;
        }
        return r;
    }

    BinaryForm scaled(const Rational& c) const {
        std::vector<Rational> a = a_;
        for (auto& q : a) q *= c;
        return from_binomial(std::move(a));
    }

    /* integer coprime coefficients, first nonzero monomial coefficient positive */
    BinaryForm primitive() const {
        if (is_zero()) return *this;
        auto m = monomial_coords();
        Int l = 1;
        for (const auto& q : m) {
            Int d = q.get_den();
            l = l / gcd(l, d) * d;
        }
        Int g = 0;
        for (auto& q : m) {
            q *= Rational(l);
            g = gcd(g, Int(q.get_num()));
        }
        int s = 0;
        for (const auto& q : m)
            if (q != 0) { s = sign(q); break; }
        for (auto& q : m) q /= Rational(g * s);
        return from_monomial(std::move(m));
    }

    bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && a_ == o.a_; }

    std::string pretty() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= degree_; ++i) {
            Rational m = monomial(i);
            if (m == 0) continue;
            if (!first) os << (sign(m) > 0 ? " + " : " - ");
            else if (sign(m) < 0) os << "-";
            first = false;
            Rational am = abs(m);
            int px = degree_ - i, py = i;
            bool coeff_one = (am == 1) && (px + py > 0);
            if (!coeff_one) os << to_string(am);
            if (px > 0) { os << "x"; if (px > 1) os << "^" << px; }
            if (py > 0) { os << "y"; if (py > 1) os << "^" << py; }
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    int degree_ = 0;
    std::vector<Rational> a_{Rational(0)};
};

inline BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Rational> a(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) a[i] = f.a(i) + g.a(i);
    return BinaryForm::from_binomial(std::move(a));
}

inline BinaryForm sub(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Rational> a(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) a[i] = f.a(i) - g.a(i);
    return BinaryForm::from_binomial(std::move(a));
}

/* product of two forms, exact monomial convolution */
inline BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
    int d = f.degree() + g.degree();
    std::vector<Rational> m(d + 1, Rational(0));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) m[i + j] += f.monomial(i) * g.monomial(j);
    return BinaryForm::from_monomial(std::move(m));
}

/* (p x + q y)^d; binomial coordinates are the plain products p^(d-i) q^i */
inline BinaryForm pow_linear(const Rational& p, const Rational& q, int d) {
    if (p == 0 && q == 0) throw std::invalid_argument("zero linear form");
    std::vector<Rational> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = pow_rational(p, static_cast<unsigned>(d - i)) * pow_rational(q, static_cast<unsigned>(i));
    return BinaryForm::from_binomial(std::move(a));
}

inline BinaryForm from_linear_factors(const std::vector<std::pair<Rational, Rational>>& factors) {
    BinaryForm f = BinaryForm::from_monomial({Rational(1)});
    for (const auto& [p, q] : factors) f = mul(f, BinaryForm::from_monomial({p, q}));
    return f;
}

/* a * df/dx + b * df/dy, a form of degree d-1; exact */
inline BinaryForm polar_derivative(const BinaryForm& f, const Rational& a, const Rational& b) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("polar derivative needs degree >= 1");
    std::vector<Rational> m(d);
    for (int s = 0; s < d; ++s)
        m[s] = a * Rational(d - s) * f.monomial(s) + b * Rational(s + 1) * f.monomial(s + 1);
    return BinaryForm::from_monomial(std::move(m));
}

/* true when g == c*f for some nonzero rational c */
inline bool proportional(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    int i0 = 0;
    while (f.a(i0) == 0 && i0 < f.degree()) ++i0;
    if (f.a(i0) == 0 || g.a(i0) == 0) return false;
    Rational c = g.a(i0) / f.a(i0);
    for (int i = 0; i <= f.degree(); ++i)
        if (g.a(i) != c * f.a(i)) return false;
    return true;
}

}  // namespace waring
