#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "waring/rational.hpp"
#include "waring/scan.hpp"

namespace waring {

/*
 * Serializers for scan results.  Both formats are append-only string builds
 * from exact cell data in row-major order, so a given scan always produces
 * the same bytes regardless of how many threads computed it.
 */

inline std::string emit_csv(const ScanResult& scan) {
    std::string out = "a,b,I12_sign,parabola_side,rank_label\n";
    for (int j = 0; j < scan.ny; ++j) {
        std::string b = to_string(scan.b_center(j));
        for (int i = 0; i < scan.nx; ++i) {
            const ScanCell& c = scan.at(i, j);
            out += to_string(scan.a_center(i));
            out += ',';
            out += b;
            out += ',';
            out += std::to_string(c.i12_sign);
            out += ',';
            out += std::to_string(c.parabola_side);
            out += ',';
            out += rank_label(c);
            out += '\n';
        }
    }
    return out;
}

struct SvgStyle {
    int cell_px = 0;  // 0 picks the largest size keeping the plot near 660 px
    std::string rank3_fill = "#f2e3c0";
    std::string rank4_fill = "#9b2c22";
    std::string boundary_fill = "#111111";
    std::string parabola_stroke = "#1b4b91";
};

namespace detail {

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/* plain SVG 1.1: one rect per cell, dashed parabola overlay, labeled axes */
inline std::string emit_svg(const ScanResult& scan, const SvgStyle& style = {}) {
    const int ml = 56, mr = 16, mt = 16, mb = 44;
    int s = style.cell_px;
    if (s <= 0) s = std::max(1, 660 / std::max(scan.nx, scan.ny));
    const int W = scan.nx * s, H = scan.ny * s;

    double a_lo = to_double(scan.a_lo), a_hi = to_double(scan.a_hi);
    double b_lo = to_double(scan.b_lo), b_hi = to_double(scan.b_hi);
    auto X = [&](double a) { return ml + (a - a_lo) / (a_hi - a_lo) * W; };
    auto Y = [&](double b) { return mt + (b_hi - b) / (b_hi - b_lo) * H; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(ml + W + mr) + "\" height=\"" + std::to_string(mt + H + mb) + "\">\n";
    out += "<rect x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(mt) + "\" width=\"" +
           std::to_string(W) + "\" height=\"" + std::to_string(H) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (int j = 0; j < scan.ny; ++j) {
        int y = mt + (scan.ny - 1 - j) * s;
        for (int i = 0; i < scan.nx; ++i) {
            const ScanCell& c = scan.at(i, j);
            const std::string& fill = c.i12_sign < 0   ? style.rank4_fill
                                      : c.i12_sign > 0 ? style.rank3_fill
                                                       : style.boundary_fill;
            out += "<rect x=\"" + std::to_string(ml + i * s) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(s) + "\" height=\"" + std::to_string(s) +
                   "\" fill=\"" + fill + "\"/>\n";
        }
    }

    /* parabola b = a^2, clipped to the window, split into visible runs */
    std::vector<std::string> run;
    auto flush_run = [&]() {
        if (run.size() >= 2) {
            out += "<polyline fill=\"none\" stroke=\"" + style.parabola_stroke +
                   "\" stroke-width=\"1.5\" stroke-dasharray=\"7,5\" points=\"";
            for (size_t k = 0; k < run.size(); ++k) {
                if (k) out += ' ';
                out += run[k];
            }
            out += "\"/>\n";
        }
        run.clear();
    };
    int samples = 4 * scan.nx;
    for (int k = 0; k <= samples; ++k) {
        double a = a_lo + (a_hi - a_lo) * k / samples;
        double b = a * a;
        if (b >= b_lo && b <= b_hi)
            run.push_back(detail::fmt2(X(a)) + "," + detail::fmt2(Y(b)));
        else
            flush_run();
    }
    flush_run();

    /* integer ticks and axis names */
    std::string axis_color = "#333333";
    for (long k = static_cast<long>(std::ceil(a_lo)); k <= static_cast<long>(std::floor(a_hi)); ++k) {
        std::string x = detail::fmt2(X(static_cast<double>(k)));
        out += "<line x1=\"" + x + "\" y1=\"" + std::to_string(mt + H) + "\" x2=\"" + x + "\" y2=\"" +
               std::to_string(mt + H + 5) + "\" stroke=\"" + axis_color + "\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + x + "\" y=\"" + std::to_string(mt + H + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" fill=\"" +
               axis_color + "\">" + std::to_string(k) + "</text>\n";
    }
    for (long k = static_cast<long>(std::ceil(b_lo)); k <= static_cast<long>(std::floor(b_hi)); ++k) {
        std::string y = detail::fmt2(Y(static_cast<double>(k)));
        out += "<line x1=\"" + std::to_string(ml - 5) + "\" y1=\"" + y + "\" x2=\"" +
               std::to_string(ml) + "\" y2=\"" + y + "\" stroke=\"" + axis_color +
               "\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + std::to_string(ml - 8) + "\" y=\"" + y +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" dy=\"4\" fill=\"" +
               axis_color + "\">" + std::to_string(k) + "</text>\n";
    }
    out += "<text x=\"" + std::to_string(ml + W / 2) + "\" y=\"" + std::to_string(mt + H + 36) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" fill=\"" +
           axis_color + "\">a</text>\n";
    out += "<text x=\"" + std::to_string(16) + "\" y=\"" + std::to_string(mt + H / 2) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" fill=\"" +
           axis_color + "\">b</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace waring
