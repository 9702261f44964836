#pragma once

#include <optional>
#include <string>

#include "waring/apolarity.hpp"
#include "waring/binary_form.hpp"
#include "waring/invariants.hpp"
#include "waring/oracle.hpp"
#include "waring/roots.hpp"

namespace waring {

enum class RankStatus {
    classified,    // real_rank is an exact, certified value
    boundary,      // measure-zero configuration; refusing to invent a rank
    unclassified,  // outside the classified degree range; bracket only
};

/*
 * Certificate vocabulary (the rule that produced the verdict):
 *   "root-count"             rank read off the number of distinct real roots
 *   "delta-sign"             cubic rule: sign of the quartic invariant delta
 *   "I12-sign"               quintic rule: sign of the degree-12 invariant
 *   "kernel-splitting"       rank from an annihilating operator's splitting
 *   "max-rank-construction"  witness produced by the d-point construction
 *   "oracle"                 numeric referee (never used for classification)
 */
struct RankResult {
    RankStatus status = RankStatus::classified;
    std::optional<int> real_rank;
    std::optional<int> complex_rank;
    std::string certificate;
    std::string note;  // boundary reason or bracket explanation, empty otherwise
    std::optional<int> lower_bound, upper_bound;  // bracket when unclassified
    std::optional<Decomposition> witness;
};

struct RankBound {
    int bound = 0;
    bool attained = false;  // true when the bound is known to be the exact rank
};

/*
 * Smallest number of complex powers summing to f: the first level whose
 * annihilating kernel contains a squarefree operator.  Pure powers are rank 1
 * whether or not they are squarefree; everything else must be squarefree.
 */
inline int complex_rank(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no rank");
    int d = f.degree();
    if (!apolar_kernel(f, 1).empty()) return 1;
    require_squarefree(f);
    const int height_budget = 16;
    for (int k = 2; k <= d; ++k)
        if (auto op = detail::find_squarefree_operator(apolar_kernel(f, k), height_budget))
            return k;
    throw search_error("no squarefree annihilator found through degree " + std::to_string(d));
}

/*
 * Quintic classifier: five distinct real roots force rank 5; otherwise the
 * kernel cubic g decides by the sign of its delta — three distinct real roots
 * (positive) give rank 3, one real root (negative) gives rank 4.  A vanishing
 * delta or an identically zero g is a genuine boundary: no rank is invented.
 */
inline RankResult rank_quintic(const BinaryForm& f, bool want_witness = false) {
    if (f.degree() != 5) throw std::invalid_argument("rank_quintic needs degree 5");
    require_squarefree(f);
    RankResult out;
    out.complex_rank = complex_rank(f);

    if (count_real_roots(f).real_distinct == 5) {
        out.real_rank = 5;
        out.certificate = "root-count";
    } else {
        BinaryForm g = quintic_kernel_cubic(f);
        if (g.is_zero()) {
            out.status = RankStatus::boundary;
            out.certificate = "I12-sign";
            out.note = "non-generic: catalecticant rank below 3, kernel cubic vanishes";
            return out;
        }
        int s = sign(cubic_delta(g));
        if (s == 0) {
            out.status = RankStatus::boundary;
            out.certificate = "I12-sign";
            out.note = "non-generic: kernel cubic has a repeated root (invariant zero), g = " + g.pretty();
            return out;
        }
        out.real_rank = (s > 0) ? 3 : 4;
        out.certificate = "I12-sign";
    }
    if (want_witness) out.witness = sylvester_decompose(f, Field::real);
    return out;
}

namespace detail {

/* degrees outside [2, 5]: bracket from kernel splitting plus the d-term upper bound */
inline RankResult fallback_rank(const BinaryForm& f, bool want_witness) {
    int d = f.degree();
    RankResult out;
    if (d == 1) {
        out.real_rank = 1;
        out.complex_rank = 1;
        out.certificate = "root-count";
        if (want_witness) out.witness = sylvester_decompose(f, Field::real);
        return out;
    }
    require_squarefree(f);
    int k = complex_rank(f);
    out.complex_rank = k;
    if (count_real_roots(f).real_distinct == d) {
        /* d distinct real roots give rank exactly d in every degree */
        out.real_rank = d;
        out.certificate = "root-count";
        if (want_witness) out.witness = construct_rank_d_decomposition(f);
        return out;
    }
    const int height_budget = 16;
    if (detail::find_real_splitting_operator(apolar_kernel(f, k), k, height_budget)) {
        out.real_rank = k;
        out.certificate = "kernel-splitting";
        if (want_witness) out.witness = sylvester_decompose(f, Field::real);
        return out;
    }
    int generic = d / 2 + 1;
    int lower = (k < generic) ? d - k + 2 : k;
    if (k == 2 && lower == d) {
        /* the complement bound is attained at k = 2 */
        out.real_rank = d;
        out.certificate = "kernel-splitting";
        if (want_witness) out.witness = construct_rank_d_decomposition(f);
        return out;
    }
    out.status = RankStatus::unclassified;
    out.certificate = "kernel-splitting";
    out.lower_bound = lower;
    out.upper_bound = d;
    out.note = "real rank bracketed in [" + std::to_string(lower) + ", " + std::to_string(d) + "]";
    return out;
}

}  // namespace detail

/*
 * Real rank for degrees 2-5 by the exact sign rules: d=2 is always 2; d=3 by
 * the sign of delta (negative means a real/complex-pair split, rank 2); d=4 by
 * the real root count (four roots force 4, otherwise 3); d=5 by the quintic
 * classifier.  Repeated roots are refused, not guessed at.  Other degrees get
 * the bracket fallback.
 */
inline RankResult real_rank(const BinaryForm& f, bool want_witness = false) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no rank");
    int d = f.degree();
    if (d < 2 || d > 5) return detail::fallback_rank(f, want_witness);
    require_squarefree(f);
    if (d == 5) return rank_quintic(f, want_witness);

    RankResult out;
    out.complex_rank = complex_rank(f);
    if (d == 2) {
        out.real_rank = 2;
        out.certificate = "root-count";
    } else if (d == 3) {
        int s = sign(cubic_delta(f));
        /* squarefree cubics never hit zero: delta is the discriminant up to scale */
        out.real_rank = (s < 0) ? 2 : 3;
        out.certificate = "delta-sign";
    } else {
        out.real_rank = (count_real_roots(f).real_distinct == 4) ? 4 : 3;
        out.certificate = "root-count";
    }
    if (want_witness) out.witness = sylvester_decompose(f, Field::real);
    return out;
}

/*
 * Lower bound for the real rank when the complex rank k is below the generic
 * value: if some degree-k annihilator splits over the reals the bound is k and
 * attained; otherwise the real rank is at least d - k + 2, attained for k = 2.
 */
inline RankBound real_rank_lower_bound(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("zero form has no rank");
    int d = f.degree();
    int k = complex_rank(f);
    int generic = d / 2 + 1;
    if (k < 2 || k >= generic)
        throw std::invalid_argument("bound applies only to sub-generic complex rank");
    const int height_budget = 16;
    if (detail::find_real_splitting_operator(apolar_kernel(f, k), k, height_budget))
        return {k, true};
    return {d - k + 2, k == 2};
}

}  // namespace waring
