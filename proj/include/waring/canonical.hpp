#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"
#include "waring/invariants.hpp"
#include "waring/mobius.hpp"
#include "waring/rational.hpp"
#include "waring/roots.hpp"

namespace waring {

enum class CanonicalFamily { q4_complex, q4_real, q5_complex, q5_real };

inline const char* family_name(CanonicalFamily f) {
    switch (f) {
        case CanonicalFamily::q4_complex: return "Q4-complex";
        case CanonicalFamily::q4_real: return "Q4-real";
        case CanonicalFamily::q5_complex: return "Q5-complex";
        case CanonicalFamily::q5_real: return "Q5-real";
    }
    return "?";
}

/*
 * A fractional-linear reduction of a quartic or quintic to its family
 * representative.  `transform` maps the representative back onto the input:
 * act(transform, family(a, b)) agrees with the input form up to one nonzero
 * scale, and `residual` is the certified relative error of exactly that
 * reproduction.  Parameters are numeric (the construction runs through
 * numeric roots); the transform itself has exact rational entries.
 */
struct CanonicalForm {
    CanonicalFamily family = CanonicalFamily::q4_complex;
    double a = 0.0;
    double b = 0.0;  // quintics only
    MobiusTransform transform;
    double residual = 0.0;
};

namespace detail {

/* numeric 2x2 maps, row-major (m0 z + m1)/(m2 z + m3) */
using NumMap = std::array<double, 4>;

inline NumMap mat_mul(const NumMap& a, const NumMap& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline std::complex<double> map_apply(const NumMap& m, std::complex<double> z) {
    return (m[0] * z + m[1]) / (m[2] * z + m[3]);
}

/* the map with z1 -> 0, z2 -> 1, z3 -> infinity */
inline NumMap to_zero_one_inf(double z1, double z2, double z3) {
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

/* the map with z1 -> w1, z2 -> w2, z3 -> w3, all finite */
inline NumMap three_point_map(double z1, double z2, double z3, double w1, double w2, double w3) {
    NumMap s = to_zero_one_inf(z1, z2, z3);
    NumMap t = to_zero_one_inf(w1, w2, w3);
    NumMap t_adj = {t[3], -t[1], -t[2], t[0]};
    return mat_mul(t_adj, s);
}

inline MobiusTransform rationalized(const NumMap& m) {
    double scale = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]), std::abs(m[3])});
    return {rational_from_double(m[0] / scale), rational_from_double(m[1] / scale),
            rational_from_double(m[2] / scale), rational_from_double(m[3] / scale)};
}

/* relative distance between g and the best scalar multiple of f */
inline double scaled_distance(const BinaryForm& g, const BinaryForm& f) {
    int d = g.degree();
    double gf = 0.0, ff = 0.0, gmax = 0.0;
    std::vector<double> gv(d + 1), fv(d + 1);
    for (int i = 0; i <= d; ++i) {
        gv[i] = to_double(g.monomial(i));
        fv[i] = to_double(f.monomial(i));
        gf += gv[i] * fv[i];
        ff += fv[i] * fv[i];
        gmax = std::max(gmax, std::abs(gv[i]));
    }
    if (ff == 0.0 || gmax == 0.0) return 1.0;
    double lambda = gf / ff;
    double worst = 0.0;
    for (int i = 0; i <= d; ++i) worst = std::max(worst, std::abs(gv[i] - lambda * fv[i]));
    return worst / gmax;
}

struct Candidate {
    CanonicalFamily family;
    NumMap forward;  // input frame -> canonical frame
    double a, b;
};

/* certify one candidate: exact transform, exact family target, measured reproduction */
inline std::optional<CanonicalForm> certify(const BinaryForm& f, const MobiusTransform& pre,
                                            const Candidate& cand, double tolerance) {
    if (!std::isfinite(cand.a) || !std::isfinite(cand.b)) return std::nullopt;
    for (double v : cand.forward)
        if (!std::isfinite(v)) return std::nullopt;
    MobiusTransform total = compose(rationalized(cand.forward), pre);
    if (total.det() == 0) return std::nullopt;

    BinaryForm target =
        (cand.family == CanonicalFamily::q4_complex || cand.family == CanonicalFamily::q4_real)
            ? quartic_family(rational_from_double(cand.a), cand.family == CanonicalFamily::q4_real)
            : quintic_family(rational_from_double(cand.a), rational_from_double(cand.b),
                             cand.family == CanonicalFamily::q5_real);

    CanonicalForm out;
    out.family = cand.family;
    out.a = cand.a;
    out.b = cand.b;
    out.transform = total.inverse();
    out.residual = scaled_distance(act(out.transform, target), f);
    if (out.residual > tolerance) return std::nullopt;
    return out;
}

}  // namespace detail

/*
 * Reduce a squarefree quartic or quintic to its canonical family.  The family
 * follows the real-root count: a surviving complex pair is sent to +-i (Q4/Q5
 * "complex" families); four or five real roots go to the all-real families
 * through a three-point map.  The free parameters are read off the images of
 * the remaining roots.  Constructions run over the numeric roots, every
 * resulting transform is rationalized exactly, and each candidate is accepted
 * only if re-acting it on the family representative reproduces the input
 * within `tolerance`; root orderings are retried until one configuration is
 * non-degenerate.
 */
inline CanonicalForm canonicalize(const BinaryForm& f, double tolerance = 1e-9) {
    int d = f.degree();
    if (d != 4 && d != 5) throw std::invalid_argument("canonicalize handles degrees 4 and 5");
    require_squarefree(f);

    /* move a root off infinity first so every later construction sees affine roots */
    MobiusTransform pre = MobiusTransform::identity();
    BinaryForm f0 = f;
    if (f.infinity_multiplicity() >= 1) {
        for (int tau = 0;; tau = (tau >= 0 ? -(tau + 1) : -tau)) {
            if (f.eval(Rational(tau), Rational(1)) != 0) {
                pre = {Rational(0), Rational(1), Rational(1), Rational(-tau)};  // z -> 1/(z - tau)
                f0 = act(pre, f);
                break;
            }
        }
    }

    auto roots = complex_roots(f0, 1e-14);
    std::vector<double> reals;
    std::vector<std::complex<double>> pairs;  // one representative per pair, im > 0
    for (const auto& r : roots) {
        std::complex<double> z = r.affine();
        if (r.certified_real)
            reals.push_back(z.real());
        else if (z.imag() > 0.0)
            pairs.push_back(z);
    }

    std::vector<detail::Candidate> candidates;

    if (d == 4 && pairs.empty()) {
        /* four real roots: send one pair of them to +-1 and balance the rest */
        const int pairings[3][4] = {{0, 1, 2, 3}, {0, 3, 1, 2}, {0, 2, 1, 3}};
        for (const auto& p : pairings) {
            double z1 = reals[p[0]], z2 = reals[p[1]], z3 = reals[p[2]], z4 = reals[p[3]];
            double kappa = ((z1 - z3) * (z2 - z4)) / ((z1 - z4) * (z2 - z3));
            if (!(kappa > 0.0)) continue;
            for (double s : {std::sqrt(kappa), -std::sqrt(kappa)}) {
                double t = (1.0 - s) / (1.0 + s);
                if (!std::isfinite(t) || t == 0.0) continue;
                detail::Candidate c;
                c.family = CanonicalFamily::q4_real;
                c.forward = detail::three_point_map(z1, z2, z3, 1.0, -1.0, t);
                c.a = -t * t;
                c.b = 0.0;
                candidates.push_back(c);
            }
        }
    } else if (d == 4) {
        /* send a pair to +-i, then a pair-preserving slide balances the rest */
        for (size_t chosen = 0; chosen < pairs.size(); ++chosen) {
            double u = pairs[chosen].real(), v = pairs[chosen].imag();
            detail::NumMap m1 = {1.0, -u, 0.0, v};
            std::vector<double> cs;
            double a_of_c_sign = 1.0;
            std::complex<double> w;
            if (reals.empty()) {
                w = detail::map_apply(m1, pairs[1 - chosen]);
                double S = w.real(), N = std::norm(w);
                if (std::abs(S) < 1e-13) {
                    cs.push_back(0.0);
                } else {
                    double disc = std::sqrt((1.0 - N) * (1.0 - N) + 4.0 * S * S);
                    cs.push_back(((1.0 - N) + disc) / (2.0 * S));
                    cs.push_back(((1.0 - N) - disc) / (2.0 * S));
                }
            } else {
                double r3 = detail::map_apply(m1, reals[0]).real();
                double r4 = detail::map_apply(m1, reals[1]).real();
                w = {r3, 0.0};
                double S = r3 + r4, P = r3 * r4;
                a_of_c_sign = -1.0;
                if (std::abs(S) < 1e-13) {
                    cs.push_back(0.0);
                } else {
                    double disc = std::sqrt(4.0 * (1.0 - P) * (1.0 - P) + 4.0 * S * S);
                    cs.push_back((2.0 * (1.0 - P) + disc) / (2.0 * S));
                    cs.push_back((2.0 * (1.0 - P) - disc) / (2.0 * S));
                }
            }
            for (double c0 : cs) {
                detail::NumMap slide = {1.0, c0, -c0, 1.0};
                std::complex<double> img = detail::map_apply(slide, w);
                double mag = (a_of_c_sign > 0.0) ? img.imag() : img.real();
                detail::Candidate c;
                c.family = CanonicalFamily::q4_complex;
                c.forward = detail::mat_mul(slide, m1);
                c.a = a_of_c_sign * mag * mag;
                c.b = 0.0;
                candidates.push_back(c);
            }
        }
    } else if (d == 5 && pairs.empty()) {
        /* five real roots: pin three of them at 0, 1, -1 */
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k) {
                    if (j == i || k == i || k == j) continue;
                    detail::NumMap m =
                        detail::three_point_map(reals[i], reals[j], reals[k], 0.0, 1.0, -1.0);
                    std::vector<double> rest;
                    for (int t = 0; t < 5; ++t)
                        if (t != i && t != j && t != k)
                            rest.push_back(detail::map_apply(m, {reals[t], 0.0}).real());
                    detail::Candidate c;
                    c.family = CanonicalFamily::q5_real;
                    c.forward = m;
                    c.a = -(rest[0] + rest[1]) / 2.0;
                    c.b = rest[0] * rest[1];
                    candidates.push_back(c);
                }
    } else {
        /* one or three real roots: a pair to +-i, a real root to 0 */
        for (size_t chosen = 0; chosen < pairs.size(); ++chosen) {
            double u = pairs[chosen].real(), v = pairs[chosen].imag();
            detail::NumMap m1 = {1.0, -u, 0.0, v};
            for (size_t rz = 0; rz < reals.size(); ++rz) {
                double r0 = detail::map_apply(m1, reals[rz]).real();
                detail::NumMap slide = {1.0, -r0, r0, 1.0};
                detail::NumMap m = detail::mat_mul(slide, m1);
                std::vector<std::complex<double>> rest;
                for (size_t t = 0; t < reals.size(); ++t)
                    if (t != rz) rest.push_back(detail::map_apply(m, {reals[t], 0.0}));
                for (size_t t = 0; t < pairs.size(); ++t)
                    if (t != chosen) {
                        std::complex<double> img = detail::map_apply(m, pairs[t]);
                        rest.push_back(img);
                        rest.push_back(std::conj(img));
                    }
                detail::Candidate c;
                c.family = CanonicalFamily::q5_complex;
                c.forward = m;
                c.a = -(rest[0] + rest[1]).real() / 2.0;
                c.b = (rest[0] * rest[1]).real();
                candidates.push_back(c);
            }
        }
    }

    for (const auto& cand : candidates)
        if (auto out = detail::certify(f, pre, cand, tolerance)) return *out;
    throw search_error("every root ordering degenerated during the reduction");
}

}  // namespace waring
