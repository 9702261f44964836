#pragma once

#include <array>

#include "waring/apolarity.hpp"
#include "waring/binary_form.hpp"
#include "waring/rational.hpp"
#include "waring/roots.hpp"

namespace waring {

/*
 * The two-parameter quintic families
 *     x (x^2 + y^2) (x^2 + 2 a x y + b y^2)   (complex pair; one or three real roots)
 *     x (x^2 - y^2) (x^2 + 2 a x y + b y^2)   (all outer roots real; three or five)
 * and the one-parameter quartic families (x^2 +- y^2)(x^2 + a y^2).  Every
 * generic quartic/quintic is equivalent to one of these under fractional-linear
 * changes of variable, which is what makes their explicit invariants portable.
 */
inline BinaryForm quintic_family(const Rational& a, const Rational& b, bool real_pair = false) {
    BinaryForm x = BinaryForm::from_monomial({Rational(1), Rational(0)});
    BinaryForm outer = BinaryForm::from_monomial({Rational(1), Rational(0), real_pair ? Rational(-1) : Rational(1)});
    BinaryForm inner = BinaryForm::from_monomial({Rational(1), 2 * a, b});
    return mul(mul(x, outer), inner);
}

inline BinaryForm quartic_family(const Rational& a, bool real_pair = false) {
    BinaryForm outer = BinaryForm::from_monomial({Rational(1), Rational(0), real_pair ? Rational(-1) : Rational(1)});
    BinaryForm inner = BinaryForm::from_monomial({Rational(1), Rational(0), a});
    return mul(outer, inner);
}

namespace detail {

struct InvariantTerm {
    int i;   // exponent of a
    int j;   // exponent of b
    long c;  // integer coefficient
};

/*
 * Degree-12 invariant of the complex-pair quintic family, tabulated term by
 * term and machine-checked against the kernel-cubic route (cubic_delta of
 * quintic_kernel_cubic equals this up to one fixed positive factor), so a
 * transcription slip cannot survive the cross-check.  Only even powers of a
 * appear: the family is symmetric under a -> -a.
 */
inline constexpr std::array<InvariantTerm, 43> i12_terms{{
    {0, 3, 2},       {0, 4, -142},    {6, 0, -64},     {0, 5, 3752},   {2, 2, -83},
    {4, 1, 144},     {2, 3, 3960},    {4, 2, -11840},  {2, 4, -62900}, {4, 5, -311952},
    {2, 7, -593208}, {6, 3, 375552},  {8, 1, 287488},  {2, 5, 348552}, {4, 3, 243056},
    {6, 1, 12096},   {2, 6, -243410}, {4, 4, -673952}, {6, 2, -392736}, {8, 2, 99840},
    {6, 4, 700160},  {4, 6, 700160},  {2, 8, 92940},   {8, 4, 7680},   {10, 2, 19712},
    {8, 3, -336640}, {6, 6, -6560},   {6, 5, -287040}, {10, 1, -115712}, {4, 8, 480},
    {4, 7, -44400},  {2, 9, -4680},   {2, 10, 77},     {8, 0, -4096},  {0, 9, -43192},
    {0, 7, 170652},  {0, 6, -43192},  {0, 8, 170652},  {10, 0, -78848}, {0, 10, 3752},
    {0, 12, 2},      {0, 11, -142},   {12, 0, 8192},
}};

/*
 * Discriminant of the x-derivative of the complex-pair quintic family, up to
 * one fixed positive factor; positive iff that derivative has no real root,
 * negative iff it has two.  Total degree 6, even in a.
 */
inline constexpr std::array<InvariantTerm, 14> d_terms{{
    {2, 0, -540}, {4, 0, -1584}, {0, 3, 830},  {0, 4, -180}, {0, 2, -180},
    {6, 0, -8192}, {0, 5, 405},  {0, 1, 405},  {2, 2, -7476}, {2, 1, 1548},
    {4, 1, 14784}, {2, 3, -396}, {4, 2, 576},  {2, 4, -432},
}};

template <size_t N>
inline Rational eval_terms(const std::array<InvariantTerm, N>& terms, const Rational& a,
                           const Rational& b) {
    Rational acc(0);
    for (const auto& t : terms) acc += Rational(t.c) * pow_rational(a, t.i) * pow_rational(b, t.j);
    return acc;
}

/*
 * Sign of a tabulated invariant at a = p/q, b = r/s without rational
 * normalization churn: clearing denominators by (q s)^total_degree turns every
 * term into an integer, and the clearing factor is positive.
 */
template <size_t N>
inline int sign_of_terms(const std::array<InvariantTerm, N>& terms, int total_degree,
                         const Rational& a, const Rational& b) {
    Int p = a.get_num(), q = a.get_den(), r = b.get_num(), s = b.get_den();
    Int acc(0);
    for (const auto& t : terms) {
        Int term(t.c);
        term *= pow_int(p, t.i) * pow_int(q, total_degree - t.i);
        term *= pow_int(r, t.j) * pow_int(s, total_degree - t.j);
        acc += term;
    }
    return sgn(acc);
}

}  // namespace detail

/* the tabulated degree-12 invariant of the complex-pair quintic family */
inline Rational I12_explicit(const Rational& a, const Rational& b) {
    return detail::eval_terms(detail::i12_terms, a, b);
}

inline int I12_sign(const Rational& a, const Rational& b) {
    return detail::sign_of_terms(detail::i12_terms, 12, a, b);
}

/*
 * The same invariant for an arbitrary quintic, through its kernel cubic:
 * cubic_delta(quintic_kernel_cubic(f)).  Positive iff the kernel cubic has
 * three distinct real roots; zero both on the genuine sign boundary and when
 * the catalecticant degenerates (g identically zero) — callers who must tell
 * those apart check quintic_kernel_cubic(f).is_zero() first.
 */
inline Rational I12_general(const BinaryForm& f) {
    if (f.degree() != 5) throw std::invalid_argument("I12_general needs degree 5");
    return cubic_delta(quintic_kernel_cubic(f));
}

/* the tabulated discriminant of the family's x-derivative */
inline Rational D_ab(const Rational& a, const Rational& b) {
    return detail::eval_terms(detail::d_terms, a, b);
}

inline int D_sign(const Rational& a, const Rational& b) {
    return detail::sign_of_terms(detail::d_terms, 6, a, b);
}

}  // namespace waring
