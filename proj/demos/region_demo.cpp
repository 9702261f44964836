/*
 * Scan the quintic-family parameter plane at poster resolution, report how
 * the rank-4 region sits relative to the parabola b = a^2, and drop an SVG.
 */

#include <fstream>
#include <iostream>

#include "waring/emit.hpp"
#include "waring/scan.hpp"

using namespace waring;

int main() {
    ScanResult scan = scan_region(Rational(-3), Rational(3), Rational(-1), Rational(6), 240, 280);

    long rank4_above = 0, rank4_below = 0, rank3 = 0, boundary = 0;
    for (const auto& cell : scan.cells) {
        if (cell.i12_sign < 0)
            (cell.parabola_side > 0 ? rank4_above : rank4_below) += 1;
        else if (cell.i12_sign > 0)
            ++rank3;
        else
            ++boundary;
    }
    std::cout << "rank-4 cells above the parabola (one real root):  " << rank4_above << "\n"
              << "rank-4 cells below the parabola (three real roots): " << rank4_below << "\n"
              << "rank-3 cells: " << rank3 << ", boundary cells: " << boundary << "\n";

    std::ofstream out("region-demo.svg", std::ios::binary);
    out << emit_svg(scan);
    std::cout << "wrote region-demo.svg\n";
    return 0;
}
