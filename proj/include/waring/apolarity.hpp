#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/rational.hpp"
#include "waring/roots.hpp"
#include "waring/upoly.hpp"

namespace waring {

/* the contraction matrix from degree-k operators to degree d-k forms */
using Catalecticant = Mat;

/*
 * Hankel matrix of f at level k: (d-k+1) x (k+1), entry (i, j) = a_{i+j} in
 * binomial coordinates.  Constant along anti-diagonals by construction.
 */
inline Catalecticant catalecticant(const BinaryForm& f, int k) {
    int d = f.degree();
    if (k < 0 || k > d) throw std::invalid_argument("catalecticant level out of range");
    Mat m(d - k + 1, k + 1);
    for (int i = 0; i <= d - k; ++i)
        for (int j = 0; j <= k; ++j) m.at(i, j) = f.a(i + j);
    return m;
}

/*
 * Exact basis of the degree-k operators annihilating f, as degree-k forms in
 * the dual variables; the monomial coefficient of X^(k-j) Y^j is the weight of
 * the mixed derivative with j copies of the second variable.
 *
 * Dimension bookkeeping: the matrix has k+1 columns and full rank
 * min(d-k+1, k+1) for generic f, so the generic kernel dimension is
 * max(0, 2k-d) — e.g. one-dimensional at d = 5, k = 3, empty for 2k < d.
 * Special forms only ever enlarge the kernel (catalecticant rank drop).
 */
inline std::vector<BinaryForm> apolar_kernel(const BinaryForm& f, int k) {
    Catalecticant m = catalecticant(f, k);
    std::vector<BinaryForm> ops;
    for (auto& v : kernel_basis(m)) {
        std::vector<Rational> mono(v.begin(), v.end());
        ops.push_back(BinaryForm::from_monomial(std::move(mono)));
    }
    return ops;
}

/*
 * Contract f by the degree-k operator op.  In binomial coordinates the result
 * of degree d-k has a'_s = (d!/(d-k)!) * sum_j op_j a_{s+j} with op_j the
 * monomial coefficient of X^(k-j) Y^j; a vector annihilates f exactly when it
 * lies in the kernel of catalecticant(f, k).
 */
inline BinaryForm apply_operator(const BinaryForm& op, const BinaryForm& f) {
    int k = op.degree(), d = f.degree();
    if (k > d) throw std::invalid_argument("operator degree exceeds form degree");
    Rational falling(1);
    for (int i = d - k + 1; i <= d; ++i) falling *= i;
    std::vector<Rational> a(d - k + 1, Rational(0));
    for (int s = 0; s <= d - k; ++s) {
        Rational acc(0);
        for (int j = 0; j <= k; ++j) acc += op.monomial(j) * f.a(s + j);
        a[s] = falling * acc;
    }
    return BinaryForm::from_binomial(std::move(a));
}

/*
 * The cubic spanning the level-3 kernel of a quintic whose catalecticant has
 * rank 3: monomial coefficients are the alternating 3x3 minors of the 3x4
 * matrix, so the contraction against f vanishes identically (Laplace expansion
 * of a 4x4 matrix with a repeated row).  Identically zero exactly when the
 * catalecticant has rank < 3.
 */
inline BinaryForm quintic_kernel_cubic(const BinaryForm& f) {
    if (f.degree() != 5) throw std::invalid_argument("quintic_kernel_cubic needs degree 5");
    Catalecticant m = catalecticant(f, 3);
    std::vector<Rational> mono(4, Rational(0));
    for (int drop = 0; drop < 4; ++drop) {
        Mat sub(3, 3);
        for (int i = 0; i < 3; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == drop) continue;
                sub.at(i, jj++) = m.at(i, j);
            }
        }
        Rational minor = det(sub);
        mono[drop] = (drop % 2 == 0) ? minor : -minor;
    }
    return BinaryForm::from_monomial(std::move(mono));
}

/* ------------------------------------------------------------------ */
/*  power-sum decompositions                                          */
/* ------------------------------------------------------------------ */

enum class Field { real, complex };

inline const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

/*
 * One term c * (l0 x + l1 y)^d.  Each term is either exact — Gaussian-rational
 * scalar and components, reconstruction residual exactly zero — or numeric
 * with the stated precision.  Components are normalized so the one of larger
 * magnitude equals 1 (ties keep the second component at 1).
 */
struct DecompositionTerm {
    bool exact = false;
    GaussianRational c_exact, l0_exact, l1_exact;
    std::complex<double> c{0.0, 0.0}, l0{0.0, 0.0}, l1{0.0, 0.0};
};

struct Decomposition {
    Field field = Field::real;
    std::vector<DecompositionTerm> terms;
    bool exact = false;     // every term exact; residual is then exactly zero
    double residual = 0.0;  // relative max-norm of f minus the reconstruction

    int rank() const { return static_cast<int>(terms.size()); }

    /*
     * The same decomposition with every scalar pushed into the linear form, so
     * real coefficients become +1 or -1 and complex ones become 1.  Numeric:
     * the d-th root of the scalar leaves exactness behind.
     */
    Decomposition unit_coefficient_form(int d) const {
        Decomposition out = *this;
        out.exact = false;
        for (auto& t : out.terms) {
            t.exact = false;
            std::complex<double> c = t.c;
            if (c == std::complex<double>(0.0, 0.0)) continue;
            std::complex<double> target(1.0, 0.0);
            if (field == Field::real && c.real() < 0.0) target = -1.0;
            std::complex<double> s = std::pow(c / target, 1.0 / d);
            t.l0 *= s;
            t.l1 *= s;
            t.c = target;
        }
        return out;
    }
};

namespace detail {

/* (u x + v y)^d in monomial coordinates over the Gaussian rationals */
inline std::vector<GaussianRational> gaussian_power_monomials(const GaussianRational& u,
                                                              const GaussianRational& v, int d) {
    std::vector<GaussianRational> m(d + 1);
    for (int i = 0; i <= d; ++i) {
        GaussianRational term(Rational(binom(d, i)), Rational(0));
        for (int p = 0; p < d - i; ++p) term = term * u;
        for (int p = 0; p < i; ++p) term = term * v;
        m[i] = term;
    }
    return m;
}

/* dense Gaussian elimination over the Gaussian rationals; nullopt when inconsistent */
inline std::optional<std::vector<GaussianRational>> gaussian_solve(
    std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!(a[i][c].re == 0 && a[i][c].im == 0)) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        GaussianRational inv = GaussianRational(Rational(1), Rational(0)) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            GaussianRational m = a[i][c];
            if (m.re == 0 && m.im == 0) continue;
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - m * a[r][j];
            b[i] = b[i] - m * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!(b[i].re == 0 && b[i].im == 0)) return std::nullopt;
    std::vector<GaussianRational> x(cols, GaussianRational(Rational(0), Rational(0)));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

/* exact projective roots (u, v) of an operator, or nullopt past quadratic radicals */
inline std::optional<std::vector<std::pair<GaussianRational, GaussianRational>>> exact_operator_roots(
    const BinaryForm& op, bool allow_complex) {
    std::vector<std::pair<GaussianRational, GaussianRational>> out;
    UPoly p = op.dehomogenized();
    int inf_mult = op.degree() - upoly::degree(p);
    if (inf_mult > 1) return std::nullopt;  // repeated root; callers want squarefree
    if (inf_mult == 1)
        out.push_back({GaussianRational(Rational(1), Rational(0)), GaussianRational(Rational(0), Rational(0))});
    for (const Rational& r : upoly::rational_roots(p)) {
        out.push_back({GaussianRational(r, Rational(0)), GaussianRational(Rational(1), Rational(0))});
        auto qr = upoly::divmod(p, upoly::make({-r, Rational(1)}));
        if (!upoly::is_zero(qr.second)) return std::nullopt;  // multiple root
        p = qr.first;
    }
    if (upoly::degree(p) == 0) return out;
    if (upoly::degree(p) == 2) {
        Rational A = p[2], B = p[1], C = p[0];
        Rational disc = B * B - 4 * A * C;
        Rational neg_disc = -disc;
        GaussianRational sq;
        Rational root;
        if (sign(disc) >= 0 && sqrt_exact(disc, root)) {
            sq = GaussianRational(root, Rational(0));
        } else if (sign(disc) < 0 && sqrt_exact(neg_disc, root)) {
            if (!allow_complex) return std::nullopt;
            sq = GaussianRational(Rational(0), root);
        } else {
            return std::nullopt;  // irrational roots; numeric path takes over
        }
        GaussianRational two_a(2 * A, Rational(0)), negb(-B, Rational(0));
        GaussianRational one(Rational(1), Rational(0));
        out.push_back({(negb + sq) / two_a, one});
        out.push_back({(negb - sq) / two_a, one});
        return out;
    }
    return std::nullopt;
}

/* scale so the larger-magnitude component is exactly 1; scalar goes into c */
inline void normalize_exact_term(DecompositionTerm& t, int d) {
    GaussianRational s = (t.l0_exact.norm() > t.l1_exact.norm()) ? t.l0_exact : t.l1_exact;
    GaussianRational inv = GaussianRational(Rational(1), Rational(0)) / s;
    t.l0_exact = t.l0_exact * inv;
    t.l1_exact = t.l1_exact * inv;
    GaussianRational sd(Rational(1), Rational(0));
    for (int i = 0; i < d; ++i) sd = sd * s;
    t.c_exact = t.c_exact * sd;
}

inline void normalize_numeric_term(DecompositionTerm& t, int d) {
    std::complex<double> s = (std::abs(t.l0) > std::abs(t.l1)) ? t.l0 : t.l1;
    t.l0 /= s;
    t.l1 /= s;
    t.c *= std::pow(s, d);
}

/* relative max-norm distance between f and the reconstructed power sum */
inline double reconstruction_residual(const BinaryForm& f, const std::vector<DecompositionTerm>& terms) {
    int d = f.degree();
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i <= d; ++i) {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& t : terms)
            acc += t.c * static_cast<double>(binom(d, i)) * std::pow(t.l0, d - i) * std::pow(t.l1, i);
        double fi = to_double(f.monomial(i));
        worst = std::max(worst, std::abs(acc - std::complex<double>(fi, 0.0)));
        scale = std::max(scale, std::abs(fi));
    }
    return scale > 0.0 ? worst / scale : worst;
}

/* exact decomposition from exact projective roots, or nullopt if f is outside their span */
inline std::optional<Decomposition> exact_decomposition_from_roots(
    const BinaryForm& f, const std::vector<std::pair<GaussianRational, GaussianRational>>& roots,
    Field field) {
    int d = f.degree();
    int r = static_cast<int>(roots.size());
    std::vector<std::vector<GaussianRational>> a(d + 1,
                                                 std::vector<GaussianRational>(r, GaussianRational(Rational(0), Rational(0))));
    std::vector<GaussianRational> b(d + 1, GaussianRational(Rational(0), Rational(0)));
    for (int j = 0; j < r; ++j) {
        auto pw = gaussian_power_monomials(roots[j].first, roots[j].second, d);
        for (int i = 0; i <= d; ++i) a[i][j] = pw[i];
    }
    for (int i = 0; i <= d; ++i) b[i] = GaussianRational(f.monomial(i), Rational(0));
    auto sol = gaussian_solve(a, b);
    if (!sol) return std::nullopt;
    Decomposition dec;
    dec.field = field;
    dec.exact = true;
    dec.residual = 0.0;
    for (int j = 0; j < r; ++j) {
        if ((*sol)[j].re == 0 && (*sol)[j].im == 0) continue;
        DecompositionTerm t;
        t.exact = true;
        t.c_exact = (*sol)[j];
        t.l0_exact = roots[j].first;
        t.l1_exact = roots[j].second;
        normalize_exact_term(t, d);
        t.c = t.c_exact.to_complex();
        t.l0 = t.l0_exact.to_complex();
        t.l1 = t.l1_exact.to_complex();
        dec.terms.push_back(t);
    }
    /* exactness is claimed, so verify the reconstruction literally */
    for (int i = 0; i <= d; ++i) {
        GaussianRational acc(Rational(0), Rational(0));
        for (const auto& t : dec.terms) {
            GaussianRational term(Rational(binom(d, i)), Rational(0));
            for (int p = 0; p < d - i; ++p) term = term * t.l0_exact;
            for (int p = 0; p < i; ++p) term = term * t.l1_exact;
            acc = acc + t.c_exact * term;
        }
        if (!(acc.re == f.monomial(i) && acc.im == 0))
            throw std::logic_error("internal: exact reconstruction mismatch");
    }
    return dec;
}

/* numeric decomposition from certified projective roots via least squares */
inline std::optional<Decomposition> numeric_decomposition_from_roots(
    const BinaryForm& f, const std::vector<ProjectiveRoot>& roots, Field field, double tolerance) {
    int d = f.degree();
    int r = static_cast<int>(roots.size());
    Eigen::MatrixXcd a(d + 1, r);
    Eigen::VectorXcd b(d + 1);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i <= d; ++i)
            a(i, j) = static_cast<double>(binom(d, i)) * std::pow(roots[j].t0, d - i) *
                      std::pow(roots[j].t1, i);
    for (int i = 0; i <= d; ++i) b(i) = to_double(f.monomial(i));
    Eigen::VectorXcd c = a.colPivHouseholderQr().solve(b);
    Decomposition dec;
    dec.field = field;
    dec.exact = false;
    for (int j = 0; j < r; ++j) {
        DecompositionTerm t;
        t.c = c(j);
        t.l0 = roots[j].t0;
        t.l1 = roots[j].t1;
        if (field == Field::real) {
            /* certified real roots and a real form give real coefficients */
            t.c = std::complex<double>(t.c.real(), 0.0);
            t.l0 = std::complex<double>(t.l0.real(), 0.0);
            t.l1 = std::complex<double>(t.l1.real(), 0.0);
        }
        normalize_numeric_term(t, d);
        dec.terms.push_back(t);
    }
    dec.residual = reconstruction_residual(f, dec.terms);
    if (dec.residual > tolerance) return std::nullopt;
    return dec;
}

/* decomposition of f from a squarefree annihilating operator, exact when possible */
inline std::optional<Decomposition> decomposition_from_operator(const BinaryForm& f,
                                                               const BinaryForm& op, Field field,
                                                               double tolerance) {
    if (auto roots = exact_operator_roots(op, field == Field::complex)) {
        if (field == Field::real) {
            bool all_real = true;
            for (auto& [u, v] : *roots)
                if (!(u.im == 0 && v.im == 0)) all_real = false;
            if (all_real)
                if (auto dec = exact_decomposition_from_roots(f, *roots, field)) return dec;
        } else {
            if (auto dec = exact_decomposition_from_roots(f, *roots, field)) return dec;
        }
    }
    return numeric_decomposition_from_roots(f, complex_roots(op), field, tolerance);
}

/*
 * Complete positivity decision for a rational polynomial: a rational point
 * with h > 0, or nullopt when h <= 0 everywhere.  Every maximal open interval
 * where h > 0 is bounded by consecutive real roots or unbounded, so testing
 * one point strictly between each adjacent root pair plus one point beyond
 * each end decides existence.
 */
inline std::optional<Rational> positivity_witness(const UPoly& h) {
    if (upoly::is_zero(h)) return std::nullopt;
    UPoly sf = upoly::squarefree_part(h);
    auto ivs = upoly::isolate_real_roots(sf);
    std::vector<Rational> candidates;
    if (ivs.empty()) {
        candidates.push_back(Rational(0));
    } else {
        /* shrink until the intervals are pairwise strictly separated */
        for (size_t i = 0; i + 1 < ivs.size(); ++i)
            while (!ivs[i].exact && !ivs[i + 1].exact && !(ivs[i].hi < ivs[i + 1].lo)) {
                ivs[i] = upoly::refine(sf, ivs[i], (ivs[i].hi - ivs[i].lo) / 4);
                ivs[i + 1] = upoly::refine(sf, ivs[i + 1], (ivs[i + 1].hi - ivs[i + 1].lo) / 4);
            }
        candidates.push_back(ivs.front().lo - 1);
        for (size_t i = 0; i + 1 < ivs.size(); ++i) {
            Rational left = ivs[i].exact ? ivs[i].root : ivs[i].hi;
            Rational right = ivs[i + 1].exact ? ivs[i + 1].root : ivs[i + 1].lo;
            candidates.push_back((left + right) / 2);
        }
        candidates.push_back(ivs.back().hi + 1);
    }
    for (const Rational& t : candidates)
        if (sign(upoly::eval(h, t)) > 0) return t;
    return std::nullopt;
}

/* discriminant-style gate: positive iff the operator has deg distinct real roots */
inline Rational real_splitting_delta(const BinaryForm& op) {
    if (op.degree() == 2) {
        Rational m0 = op.monomial(0), m1 = op.monomial(1), m2 = op.monomial(2);
        return m1 * m1 - 4 * m0 * m2;
    }
    if (op.degree() == 3) return cubic_delta(op);
    throw std::invalid_argument("real_splitting_delta handles degrees 2 and 3");
}

/*
 * Exact search of the pencil g0 + t g1 (g1 itself standing for t = infinity)
 * for an element with r distinct real projective roots, r in {2, 3}.  The
 * discriminant gate along the pencil is a polynomial in t of degree <= 2(r-1)+
 * epsilon, recovered exactly by interpolation; positivity_witness then decides.
 */
inline std::optional<BinaryForm> real_splitting_in_pencil(const BinaryForm& g0, const BinaryForm& g1) {
    int r = g0.degree();
    int bound = (r == 2) ? 2 : 4;
    std::vector<Rational> nodes, values;
    for (int i = 0; i <= bound; ++i) {
        Rational t(i);
        nodes.push_back(t);
        values.push_back(real_splitting_delta(add(g0, g1.scaled(t))));
    }
    UPoly h = upoly::interpolate(nodes, values);
    if (auto t = positivity_witness(h)) return add(g0, g1.scaled(*t));
    if (sign(real_splitting_delta(g1)) > 0) return g1;
    return std::nullopt;
}

/*
 * Deterministic enumeration of primitive integer combinations of a kernel
 * basis in increasing max-norm, accepting the first element the predicate
 * likes.  The accepted sets are open cones, so rational points are reachable;
 * the height budget keeps the search finite.
 */
template <typename Pred>
inline std::optional<BinaryForm> search_kernel_combinations(const std::vector<BinaryForm>& basis,
                                                            int max_height, Pred&& accept) {
    int dim = static_cast<int>(basis.size());
    std::vector<long> lambda(dim);
    for (int height = 1; height <= max_height; ++height) {
        std::fill(lambda.begin(), lambda.end(), -height);
        while (true) {
            long maxabs = 0, first_nonzero = 0;
            long g = 0;
            for (long v : lambda) {
                maxabs = std::max(maxabs, std::abs(v));
                if (first_nonzero == 0) first_nonzero = v;
                g = std::gcd(g, std::abs(v));
            }
            if (maxabs == height && first_nonzero > 0 && g == 1) {
                BinaryForm w = basis[0].scaled(Rational(lambda[0]));
                for (int i = 1; i < dim; ++i) w = add(w, basis[i].scaled(Rational(lambda[i])));
                if (accept(w)) return w;
            }
            int i = dim - 1;
            while (i >= 0 && lambda[i] == height) lambda[i--] = -height;
            if (i < 0) break;
            ++lambda[i];
        }
    }
    return std::nullopt;
}

/*
 * An element of the kernel with r distinct real projective roots, if the
 * routing below can find one: single generators are tested directly,
 * two-dimensional kernels at r in {2, 3} get the complete pencil decision,
 * and anything bigger falls to the height-ordered search.
 */
inline std::optional<BinaryForm> find_real_splitting_operator(const std::vector<BinaryForm>& kernel,
                                                              int r, int height_budget) {
    if (kernel.empty()) return std::nullopt;
    auto splits = [&](const BinaryForm& w) {
        return !w.is_zero() && count_real_roots(w).real_distinct == r;
    };
    if (kernel.size() == 1) {
        if (splits(kernel[0])) return kernel[0];
        return std::nullopt;
    }
    if (kernel.size() == 2 && (r == 2 || r == 3))
        return real_splitting_in_pencil(kernel[0], kernel[1]);
    return search_kernel_combinations(kernel, height_budget, splits);
}

/* a squarefree kernel element — over the complex numbers that is all splitting takes */
inline std::optional<BinaryForm> find_squarefree_operator(const std::vector<BinaryForm>& kernel,
                                                          int height_budget) {
    if (kernel.empty()) return std::nullopt;
    auto squarefree = [](const BinaryForm& w) { return !w.is_zero() && is_squarefree(w); };
    if (kernel.size() == 1) {
        if (squarefree(kernel[0])) return kernel[0];
        return std::nullopt;
    }
    return search_kernel_combinations(kernel, height_budget, squarefree);
}

}  // namespace detail

/*
 * Explicit real decomposition of any nonzero f into at most d powers: pick
 * d-1 probe directions on the curve of d-th powers, cut the hyperplane
 * through f and those powers, and restrict it back to the curve.  The
 * restriction is a degree <= d polynomial with the probes among its roots, so
 * exact division forces the final direction (possibly at infinity) and the
 * coefficients come from an exact consistent linear solve — residual is
 * exactly zero.  Degenerate probe configurations are retried with fresh
 * deterministic rational probes.
 */
inline Decomposition construct_rank_d_decomposition(
    const BinaryForm& f, std::optional<std::vector<Rational>> probe_points = std::nullopt) {
    if (f.is_zero()) throw std::invalid_argument("cannot decompose the zero form");
    int d = f.degree();

    std::vector<Rational> probes;
    if (probe_points) {
        if (static_cast<int>(probe_points->size()) != d - 1)
            throw std::invalid_argument("need exactly d-1 probe points");
        probes = *probe_points;
    } else {
        for (int i = 1; i <= d - 1; ++i) probes.push_back(Rational(i));
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> num(-24, 24), den(1, 9);
    std::string attempts_log;

    const int retries = 12;
    for (int attempt = 0; attempt < retries; ++attempt) {
        bool distinct = true;
        for (size_t i = 0; i < probes.size() && distinct; ++i)
            for (size_t j = i + 1; j < probes.size(); ++j)
                if (probes[i] == probes[j]) { distinct = false; break; }

        if (distinct) {
            /* hyperplane through f and the probe powers, in monomial coordinates */
            Mat sys(d, d + 1);
            for (int i = 0; i < d - 1; ++i) {
                BinaryForm p = pow_linear(Rational(1), probes[i], d);
                for (int s = 0; s <= d; ++s) sys.at(i, s) = p.monomial(s);
            }
            for (int s = 0; s <= d; ++s) sys.at(d - 1, s) = f.monomial(s);
            auto hyper = kernel_basis(sys);
            if (hyper.size() == 1) {
                /* restriction to the curve: psi(t) = <H, (x + t y)^d> */
                std::vector<Rational> psi_coeffs(d + 1);
                for (int s = 0; s <= d; ++s) psi_coeffs[s] = Rational(hyper[0][s]) * binom(d, s);
                UPoly psi = upoly::make(std::move(psi_coeffs));
                bool ok = true;
                for (const Rational& t : probes) {
                    auto qr = upoly::divmod(psi, upoly::make({-t, Rational(1)}));
                    if (!upoly::is_zero(qr.second)) { ok = false; break; }
                    psi = qr.first;
                }
                if (ok && upoly::degree(psi) <= 1) {
                    std::vector<std::pair<Rational, Rational>> dirs;  // (u, v) with l = u x + v y
                    for (const Rational& t : probes) dirs.push_back({Rational(1), t});
                    if (upoly::degree(psi) == 1) {
                        Rational last = -psi[0] / psi[1];
                        bool fresh = std::none_of(probes.begin(), probes.end(),
                                                  [&](const Rational& t) { return t == last; });
                        if (fresh)
                            dirs.push_back({Rational(1), last});
                        else
                            ok = false;
                    } else {
                        dirs.push_back({Rational(0), Rational(1)});  // forced root at infinity
                    }
                    if (ok) {
                        std::vector<std::pair<GaussianRational, GaussianRational>> roots;
                        for (auto& [u, v] : dirs)
                            roots.push_back({GaussianRational(u, Rational(0)), GaussianRational(v, Rational(0))});
                        if (auto dec = detail::exact_decomposition_from_roots(f, roots, Field::real))
                            return *dec;
                    }
                }
            }
        }

        /* degenerate configuration: log it and redraw */
        attempts_log += attempts_log.empty() ? "" : "; ";
        for (size_t i = 0; i < probes.size(); ++i)
            attempts_log += (i ? "," : "(") + to_string(probes[i]);
        attempts_log += ")";
        for (auto& t : probes) t = Rational(num(rng), den(rng));
    }
    throw search_error("probe configurations stayed degenerate: " + attempts_log);
}

/*
 * Sylvester's incremental search: the smallest r such that some annihilating
 * operator of degree r has r distinct roots over the requested field, together
 * with the resulting decomposition.
 *
 * Route by kernel dimension at each level: a single generator is tested
 * directly; two-dimensional kernels at r in {2, 3} get the exact pencil
 * decision (complete); higher-dimensional kernels are searched over primitive
 * rational combinations in height order, which reaches the open cone of
 * splitting operators whenever it is nonempty, under a fixed height budget.
 * Forms with d distinct real roots skip straight to the rank-d construction,
 * which is minimal for them.
 */
inline Decomposition sylvester_decompose(const BinaryForm& f, Field field,
                                         double tolerance = 1e-9) {
    if (f.is_zero()) throw std::invalid_argument("cannot decompose the zero form");
    int d = f.degree();

    /* rank one: a degree-1 annihilator exists exactly for pure powers */
    auto k1 = apolar_kernel(f, 1);
    if (!k1.empty()) {
        GaussianRational u(k1[0].monomial(1), Rational(0)), v(-k1[0].monomial(0), Rational(0));
        if (auto dec = detail::exact_decomposition_from_roots(f, {{u, v}}, field)) return *dec;
        throw std::logic_error("internal: degree-1 annihilator without a rank-1 witness");
    }

    require_squarefree(f);

    if (field == Field::real && count_real_roots(f).real_distinct == d) {
        Decomposition dec = construct_rank_d_decomposition(f);
        dec.field = Field::real;
        return dec;
    }

    const int height_budget = 16;
    for (int r = 2; r <= d; ++r) {
        if (field == Field::real && r == d) {
            Decomposition dec = construct_rank_d_decomposition(f);
            dec.field = Field::real;
            return dec;
        }
        auto kernel = apolar_kernel(f, r);
        if (kernel.empty()) continue;

        std::optional<BinaryForm> op =
            field == Field::real ? detail::find_real_splitting_operator(kernel, r, height_budget)
                                 : detail::find_squarefree_operator(kernel, height_budget);
        if (!op) continue;
        if (auto dec = detail::decomposition_from_operator(f, *op, field, tolerance)) return *dec;
    }
    throw search_error("no splitting annihilator found through degree " + std::to_string(d));
}

}  // namespace waring
