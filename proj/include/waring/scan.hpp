#pragma once

#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "waring/canonical.hpp"
#include "waring/invariants.hpp"
#include "waring/rational.hpp"

namespace waring {

/*
 * Region scan of the (a, b) parameter plane for the one-complex-pair quintic
 * family x(x^2+y^2)(x^2+2axy+by^2).  Every cell is evaluated at its exact
 * rational center, so a sign is a theorem about that point, not a float
 * artifact.  For this family the classifier reduces to the kernel-cubic
 * discriminant, which is what the rank label encodes:
 *
 *   i12_sign < 0  ->  rank 4      i12_sign > 0  ->  rank 3      0 -> boundary
 *
 * The all-real quintic family breaks that correspondence (five real roots
 * force rank 5 regardless of the kernel cubic), so the scan refuses it
 * rather than emit a misleading picture.
 */

struct ScanCell {
    int i12_sign = 0;       // sign of the degree-12 invariant at the cell center
    int d_sign = 0;         // sign of the companion sextic invariant
    int parabola_side = 0;  // sign of b - a^2
    int real_roots = 0;     // real roots of the family member: 1 above, 3 below, 2 on the parabola
};

struct ScanResult {
    Rational a_lo, a_hi, b_lo, b_hi;
    int nx = 0, ny = 0;
    std::vector<ScanCell> cells;  // row-major, b ascending then a ascending

    const ScanCell& at(int i, int j) const { return cells[static_cast<size_t>(j) * nx + i]; }
    Rational a_center(int i) const { return a_lo + (a_hi - a_lo) * Rational(2 * i + 1) / Rational(2 * nx); }
    Rational b_center(int j) const { return b_lo + (b_hi - b_lo) * Rational(2 * j + 1) / Rational(2 * ny); }
};

/* 4 for negative invariant, 3 for positive, 0 marking the boundary locus */
inline int rank_of_cell(const ScanCell& c) { return c.i12_sign < 0 ? 4 : (c.i12_sign > 0 ? 3 : 0); }

inline std::string rank_label(const ScanCell& c) {
    int r = rank_of_cell(c);
    return r == 0 ? "boundary" : std::to_string(r);
}

inline ScanResult scan_region(const Rational& a_lo, const Rational& a_hi, const Rational& b_lo,
                              const Rational& b_hi, int nx, int ny,
                              CanonicalFamily family = CanonicalFamily::q5_complex,
                              unsigned threads = 0) {
    if (family != CanonicalFamily::q5_complex)
        throw std::invalid_argument(
            "the region scan is defined for the one-complex-pair quintic family");
    if (nx <= 0 || ny <= 0) throw std::invalid_argument("scan resolution must be positive");
    if (a_lo >= a_hi || b_lo >= b_hi) throw std::invalid_argument("scan ranges must be nonempty");

    ScanResult out;
    out.a_lo = a_lo;
    out.a_hi = a_hi;
    out.b_lo = b_lo;
    out.b_hi = b_hi;
    out.nx = nx;
    out.ny = ny;
    out.cells.resize(static_cast<size_t>(nx) * ny);

    auto fill_rows = [&out](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            Rational b = out.b_center(j);
            for (int i = 0; i < out.nx; ++i) {
                Rational a = out.a_center(i);
                ScanCell cell;
                cell.i12_sign = I12_sign(a, b);
                cell.d_sign = D_sign(a, b);
                cell.parabola_side = sign(b - a * a);
                cell.real_roots = cell.parabola_side > 0 ? 1 : (cell.parabola_side < 0 ? 3 : 2);
                out.cells[static_cast<size_t>(j) * out.nx + i] = cell;
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(ny));
    if (threads <= 1) {
        fill_rows(0, ny);
    } else {
        /* disjoint row blocks into a preallocated buffer: schedule cannot reorder output */
        std::vector<std::future<void>> work;
        int chunk = (ny + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (int j = 0; j < ny; j += chunk)
            work.push_back(std::async(std::launch::async, fill_rows, j, std::min(j + chunk, ny)));
        for (auto& w : work) w.get();
    }
    return out;
}

}  // namespace waring
