/*
 * Walk a handful of forms through the classifier and print every certificate
 * and witness the library can produce for them.
 */

#include <iostream>

#include "waring/apolarity.hpp"
#include "waring/json_io.hpp"
#include "waring/rank.hpp"

using namespace waring;

int main() {
    struct Row {
        const char* label;
        BinaryForm form;
    };
    const Row rows[] = {
        {"2x^3 - 6xy^2", BinaryForm::from_monomial({Rational(2), Rational(0), Rational(-6), Rational(0)})},
        {"x^3 + y^3", BinaryForm::from_monomial({Rational(1), Rational(0), Rational(0), Rational(1)})},
        {"x^4 + y^4", BinaryForm::from_monomial({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})},
        {"x^5 + 5x^4y - 10x^3y^2 + 20x^2y^3 + 5xy^4 - 7y^5",
         BinaryForm::from_monomial({Rational(1), Rational(5), Rational(-10), Rational(20), Rational(5), Rational(-7)})},
    };

    for (const auto& row : rows) {
        std::cout << "== " << row.label << "\n";
        RankResult r = real_rank(row.form, /*want_witness=*/true);
        std::cout << to_json(r).dump(2) << "\n";
        Decomposition complex_dec = sylvester_decompose(row.form, Field::complex);
        std::cout << "complex decomposition (rank " << complex_dec.rank()
                  << ", residual " << complex_dec.residual << "):\n"
                  << to_json(complex_dec).dump(2) << "\n\n";
    }
    return 0;
}
