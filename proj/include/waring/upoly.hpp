#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/rational.hpp"

namespace waring {

/* dense univariate polynomial over the rationals; coeff[i] multiplies x^i, zero poly is empty */
using UPoly = std::vector<Rational>;

namespace upoly {

inline void prune(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const UPoly& p) { return p.empty(); }
inline const Rational& lc(const UPoly& p) { return p.back(); }

inline UPoly make(std::vector<Rational> c) {
    UPoly p(std::move(c));
    prune(p);
    return p;
}

inline Rational eval(const UPoly& p, const Rational& x) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
    return d;
}

inline UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    prune(r);
    return r;
}

inline UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    prune(r);
    return r;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline UPoly scale(UPoly p, const Rational& c) {
    if (c == 0) return {};
    for (auto& q : p) q *= c;
    return p;
}

inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    UPoly r = a, q;
    int db = degree(b);
    if (degree(a) >= db) q.assign(a.size() - b.size() + 1, Rational(0));
    while (degree(r) >= db) {
        Rational f = lc(r) / lc(b);
        int shift = degree(r) - db;
        q[shift] = f;
        for (int i = 0; i <= db; ++i) r[shift + i] -= f * b[i];
        prune(r);
    }
    return {q, r};
}

inline UPoly monic(UPoly p) {
    if (p.empty()) return p;
    Rational l = lc(p);
    for (auto& q : p) q /= l;
    return p;
}

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

inline UPoly squarefree_part(const UPoly& p) {
    if (degree(p) <= 0) return monic(p);
    UPoly g = gcd(p, derivative(p));
    if (degree(g) == 0) return monic(p);
    return monic(divmod(p, g).first);
}

/* every real root lies in (-B, B) */
inline Rational root_bound(const UPoly& p) {
    Rational m = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / lc(p))));
    return m + 1;
}

/* Sturm machinery: negated-remainder chain, sign variation counts */

inline std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> s;
    if (p.empty()) return s;
    s.push_back(p);
    UPoly d = derivative(p);
    if (d.empty()) return s;
    s.push_back(d);
    while (true) {
        UPoly r = divmod(s[s.size() - 2], s.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        s.push_back(std::move(r));
    }
    return s;
}

inline int sign_variations_at(const std::vector<UPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int sign_variations_at_inf(const std::vector<UPoly>& chain, int dir /* +1 or -1 */) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign(lc(p));
        if (dir < 0 && (degree(p) % 2)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

/* distinct real roots of p (multiplicity ignored); exact */
inline int count_distinct_real_roots(const UPoly& p) {
    if (degree(p) <= 0) return 0;
    UPoly sf = squarefree_part(p);
    if (degree(sf) <= 0) return 0;
    auto chain = sturm_chain(sf);
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

struct RootInterval {
    Rational lo, hi;  // root lies in (lo, hi]; when exact, lo == hi == root
    bool exact = false;
    Rational root;    // meaningful only when exact
};

namespace detail {

inline void isolate_rec(const std::vector<UPoly>& chain, const UPoly& p,
                        const Rational& lo, const Rational& hi, int vlo, int vhi,
                        std::vector<RootInterval>& out) {
    int n = vlo - vhi;
    if (n == 0) return;
    if (eval(p, hi) == 0) {
        out.push_back({hi, hi, true, hi});
        /* shrink a gap below the exact root until the remainder of the interval excludes it */
        Rational delta = (hi - lo) / 4;
        while (sign_variations_at(chain, hi - delta) - vhi != 1) delta /= 2;
        isolate_rec(chain, p, lo, hi - delta, vlo, sign_variations_at(chain, hi - delta), out);
        return;
    }
    if (n == 1) {
        out.push_back({lo, hi, false, 0});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (eval(p, mid) == 0) {
        out.push_back({mid, mid, true, mid});
        /* shrink a symmetric gap around the exact root until it isolates only that root */
        Rational delta = (hi - lo) / 4;
        while (sign_variations_at(chain, mid - delta) - sign_variations_at(chain, mid + delta) != 1)
            delta /= 2;
        isolate_rec(chain, p, lo, mid - delta, vlo, sign_variations_at(chain, mid - delta), out);
        isolate_rec(chain, p, mid + delta, hi, sign_variations_at(chain, mid + delta), vhi, out);
        return;
    }
    int vm = sign_variations_at(chain, mid);
    isolate_rec(chain, p, lo, mid, vlo, vm, out);
    isolate_rec(chain, p, mid, hi, vm, vhi, out);
}

}  // namespace detail

/* disjoint isolating intervals for the real roots of a squarefree p, sorted ascending */
inline std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
    std::vector<RootInterval> out;
    if (degree(p) <= 0) return out;
    auto chain = sturm_chain(p);
    Rational b = root_bound(p);
    detail::isolate_rec(chain, p, -b, b, sign_variations_at(chain, -b), sign_variations_at(chain, b), out);
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) {
        return (x.exact ? x.root : x.hi) < (y.exact ? y.root : y.hi);
    });
    return out;
}

/* bisect a sign-changing isolating interval until its width is below eps */
inline RootInterval refine(const UPoly& p, RootInterval iv, const Rational& eps) {
    if (iv.exact) return iv;
    Rational lo = iv.lo, hi = iv.hi;
    int shi = sign(eval(p, hi));
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(eval(p, mid));
        if (sm == 0) {
            iv.exact = true;
            iv.root = mid;
            iv.lo = iv.hi = mid;
            return iv;
        }
        if (sm == shi) hi = mid; else lo = mid;
    }
    iv.lo = lo;
    iv.hi = hi;
    return iv;
}

/* rational roots by the divisor test; p need not be squarefree */
inline std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> out;
    if (degree(p) <= 0) return out;
    UPoly q = p;
    size_t low = 0;
    while (low < q.size() && q[low] == 0) ++low;
    if (low > 0) {
        out.push_back(0);
        q.erase(q.begin(), q.begin() + low);
    }
    if (degree(q) <= 0) return out;
    Int l = 1;
    for (const auto& c : q) {
        Int d = c.get_den();
        l = l / ::gcd(l, d) * d;
    }
    Int a0 = Int(q.front().get_num()) * (l / Int(q.front().get_den()));
    Int an = Int(q.back().get_num()) * (l / Int(q.back().get_den()));
    a0 = abs(a0);
    an = abs(an);
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    if (a0 == 0 || an == 0) return out;  // cannot happen after stripping, defensive
    /* cap the enumeration: huge coefficients fall back to numeric paths downstream */
    if (a0 > 100000000 || an > 100000000) return out;
    for (const Int& num : divisors(a0))
        for (const Int& den : divisors(an)) {
            Rational r = make_rational(num, den);
            if (eval(q, r) == 0) out.push_back(r);
            if (eval(q, -r) == 0) out.push_back(-r);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/* resultant via the Sylvester matrix with exact fraction-free determinant */
inline Rational resultant(const UPoly& p, const UPoly& q) {
    int m = degree(p), n = degree(q);
    if (m < 0 || n < 0) return 0;
    if (m == 0) return pow_rational(p[0], static_cast<unsigned>(n));
    if (n == 0) return pow_rational(q[0], static_cast<unsigned>(m));
    Mat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = p[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = q[n - j];
    return det(s);
}

/* exact Lagrange interpolation through (nodes[i], values[i]) with distinct nodes */
inline UPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    UPoly acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UPoly li = {Rational(1)};
        Rational denom = 1;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            li = mul(li, UPoly{-nodes[j], Rational(1)});
            denom *= nodes[i] - nodes[j];
        }
        acc = add(acc, scale(std::move(li), values[i] / denom));
    }
    return acc;
}

}  // namespace upoly
}  // namespace waring
