#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"
#include "waring/upoly.hpp"

namespace waring {

struct RootCount {
    int real_distinct = 0;        // distinct real projective roots, (1:0) included
    int complex_pairs = 0;        // distinct conjugate pairs
    int multiplicity_excess = 0;  // degree minus number of distinct projective roots
    bool squarefree = false;
};

/* exact root census via Sturm sequences on the dehomogenization */
inline RootCount count_real_roots(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no root count");
    int d = f.degree();
    UPoly p = f.dehomogenized();
    int k = d - upoly::degree(p);  // multiplicity of (1:0)
    UPoly sf = upoly::squarefree_part(p);
    int finite_real = upoly::count_distinct_real_roots(sf);
    RootCount rc;
    rc.real_distinct = finite_real + (k >= 1 ? 1 : 0);
    rc.complex_pairs = (upoly::degree(sf) - finite_real) / 2;
    rc.multiplicity_excess = d - rc.real_distinct - 2 * rc.complex_pairs;
    rc.squarefree = (rc.multiplicity_excess == 0);
    return rc;
}

inline bool is_squarefree(const BinaryForm& f) { return count_real_roots(f).squarefree; }

/* the repeated part of f (nonempty exactly when f is not squarefree) */
inline std::optional<BinaryForm> squarefree_defect(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    int d = f.degree();
    UPoly p = f.dehomogenized();
    int k = d - upoly::degree(p);
    UPoly g = upoly::gcd(p, upoly::derivative(p));
    int extra_y = std::max(0, k - 1);
    if (upoly::degree(g) <= 0 && extra_y == 0) return std::nullopt;
    /* lift the gcd back to a form and append the repeated y factor */
    int dg = upoly::degree(g);
    std::vector<Rational> m(dg + 1 + extra_y, Rational(0));
    for (int i = 0; i <= dg; ++i) m[dg - i + extra_y] = g[i];
    return BinaryForm::from_monomial(std::move(m)).primitive();
}

/* throws squarefree_error naming the repeated factor when f is not squarefree */
inline void require_squarefree(const BinaryForm& f) {
    auto defect = squarefree_defect(f);
    if (defect) throw squarefree_error(defect->pretty());
}

/*
 * Discriminant of f through its dehomogenization p, declared degree n = deg p:
 *     disc = (-1)^(n(n-1)/2) * Res(p, p') / lc(p).
 * A repeated root at (1:0) forces 0; a simple root there drops to the degree
 * n = d-1 discriminant, which still vanishes exactly on repeated roots and for
 * d = 2, 3 keeps the sign rule "positive iff all roots real and distinct".
 */
inline Rational discriminant(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no discriminant");
    if (f.infinity_multiplicity() >= 2) return 0;
    UPoly p = f.dehomogenized();
    int n = upoly::degree(p);
    if (n <= 1) return 1;
    Rational r = upoly::resultant(p, upoly::derivative(p)) / upoly::lc(p);
    return ((static_cast<long>(n) * (n - 1) / 2) % 2) ? -r : r;
}

/*
 * Quartic invariant of a binary cubic on binomial coordinates:
 *     delta = 4 * |a0 a1; a1 a2| * |a1 a2; a2 a3| - |a0 a2; a1 a3|^2
 * Equals disc/27 of the monomial cubic; positive iff three distinct real
 * projective roots, zero iff a repeated root ((1:0) included).
 */
inline Rational cubic_delta(const BinaryForm& f) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_delta needs a cubic");
    const Rational &a0 = f.a(0), &a1 = f.a(1), &a2 = f.a(2), &a3 = f.a(3);
    return 4 * (a0 * a2 - a1 * a1) * (a1 * a3 - a2 * a2) - (a0 * a3 - a1 * a2) * (a0 * a3 - a1 * a2);
}

/* projective root, components scaled so the larger-magnitude one equals 1 */
struct ProjectiveRoot {
    std::complex<double> t0{0.0, 0.0};
    std::complex<double> t1{0.0, 0.0};
    bool certified_real = false;  // set by Sturm isolation; imaginary parts exactly zero

    bool at_infinity() const { return t1 == std::complex<double>(0.0, 0.0); }
    /* affine value t0/t1 for finite roots */
    std::complex<double> affine() const { return t0 / t1; }
};

namespace detail {

inline ProjectiveRoot normalized_root(std::complex<double> z, bool real) {
    ProjectiveRoot r;
    if (std::abs(z) <= 1.0) {
        r.t0 = real ? std::complex<double>(z.real(), 0.0) : z;
        r.t1 = 1.0;
    } else {
        r.t0 = 1.0;
        std::complex<double> w = 1.0 / z;
        r.t1 = real ? std::complex<double>(w.real(), 0.0) : w;
    }
    r.certified_real = real;
    return r;
}

/* Durand-Kerner on a monic complex polynomial (coeff[i] of z^i, top coeff omitted) */
inline std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& monic,
                                                      double tol) {
    int n = static_cast<int>(monic.size());
    std::vector<std::complex<double>> x(n);
    std::complex<double> seed(0.4, 0.9), s(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        s *= seed;
        x[i] = s;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 1.0;
        for (int i = n - 1; i >= 0; --i) v = v * z + monic[i];
        return v;
    };
    /* at the fixed point the steps oscillate at a few ulps, which can sit just
     * above a very tight tol forever; remember the quietest sweep and accept
     * it afterwards as long as it is far below anything callers resolve */
    std::vector<std::complex<double>> best_x = x;
    double best_worst = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 600; ++it) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= x[i] - x[j];
            std::complex<double> step = eval(x[i]) / den;
            x[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(x[i])));
        }
        if (worst < tol) return x;
        if (worst < best_worst) {
            best_worst = worst;
            best_x = x;
        }
    }
    if (best_worst < 1e-10) return best_x;
    throw convergence_error("root iteration did not reach the requested precision");
}

/* Yun squarefree decomposition: returns (factor, multiplicity), factors squarefree */
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (upoly::degree(p) <= 0) return out;
    UPoly g = upoly::gcd(p, upoly::derivative(p));
    if (upoly::degree(g) == 0) {
        out.push_back({upoly::monic(p), 1});
        return out;
    }
    UPoly w = upoly::divmod(p, g).first;
    int i = 1;
    while (upoly::degree(w) > 0) {
        UPoly y = upoly::gcd(w, g);
        UPoly fac = upoly::divmod(w, y).first;
        if (upoly::degree(fac) > 0) out.push_back({upoly::monic(fac), i});
        w = y;
        g = upoly::divmod(g, y).first;
        ++i;
    }
    return out;
}

}  // namespace detail

/*
 * All d projective roots at the requested relative precision (default 1e-12).
 * Real roots are certified by Sturm isolation and refined by exact bisection,
 * so they carry exactly zero imaginary part; conjugate pairs sit adjacent with
 * the second entry the exact mirror of the first.  Repeated factors are split
 * off exactly first, so multiple roots are emitted with their multiplicity.
 */
inline std::vector<ProjectiveRoot> complex_roots(const BinaryForm& f, double precision = 1e-12) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no roots");
    int d = f.degree();
    UPoly p = f.dehomogenized();
    int inf_mult = d - upoly::degree(p);

    std::vector<std::pair<double, int>> reals;                 // (value, multiplicity)
    std::vector<std::pair<std::complex<double>, int>> pairs;   // representative im > 0

    Rational eps = rational_from_double(std::max(precision, 1e-15));
    for (auto& [sf, mult] : detail::squarefree_decomposition(p)) {
        std::vector<double> fac_reals;
        auto ivs = upoly::isolate_real_roots(sf);
        for (auto& iv : ivs) {
            Rational width_goal = eps * std::max(Rational(abs(iv.exact ? iv.root : iv.hi)), Rational(1));
            auto r = upoly::refine(sf, iv, width_goal);
            fac_reals.push_back(r.exact ? to_double(r.root) : to_double((r.lo + r.hi) / 2));
        }
        int n_pairs = (upoly::degree(sf) - static_cast<int>(ivs.size())) / 2;
        if (n_pairs > 0) {
            std::vector<std::complex<double>> monic(sf.size() - 1);
            for (size_t i = 0; i + 1 < sf.size(); ++i) monic[i] = to_double(sf[i] / upoly::lc(sf));
            auto all = detail::durand_kerner(monic, 1e-15);
            /* strike the numeric copies of the certified real roots, keep one per pair */
            std::vector<char> used(all.size(), 0);
            for (double rv : fac_reals) {
                int best = -1;
                double bd = 0;
                for (size_t i = 0; i < all.size(); ++i) {
                    if (used[i]) continue;
                    double dd = std::abs(all[i] - rv);
                    if (best < 0 || dd < bd) { best = static_cast<int>(i); bd = dd; }
                }
                if (best >= 0) used[best] = 1;
            }
            int found = 0;
            for (size_t i = 0; i < all.size(); ++i)
                if (!used[i] && all[i].imag() > 0.0) { pairs.push_back({all[i], mult}); ++found; }
            if (found != n_pairs)
                throw convergence_error("conjugate pairing failed at the requested precision");
        }
        for (double rv : fac_reals) reals.push_back({rv, mult});
    }

    std::sort(reals.begin(), reals.end());
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });

    std::vector<ProjectiveRoot> out;
    for (auto& [rv, mult] : reals)
        for (int c = 0; c < mult; ++c) out.push_back(detail::normalized_root({rv, 0.0}, true));
    for (int i = 0; i < inf_mult; ++i) {
        ProjectiveRoot r;
        r.t0 = 1.0;
        r.t1 = 0.0;
        r.certified_real = true;
        out.push_back(r);
    }
    for (auto& [z, mult] : pairs)
        for (int c = 0; c < mult; ++c) {
            ProjectiveRoot r = detail::normalized_root(z, false);
            ProjectiveRoot rbar = r;
            rbar.t0 = std::conj(r.t0);
            rbar.t1 = std::conj(r.t1);
            out.push_back(r);
            out.push_back(rbar);
        }
    return out;
}

}  // namespace waring
