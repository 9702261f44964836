#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/* dense exact-rational matrix, row major */
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

/*
 * fraction-free forward elimination (Bareiss): every division below is exact,
 * which keeps intermediate entries as single products instead of deep fractions.
 * Column pivoting handles rank deficiency; returns the pivot columns.
 */
inline std::vector<int> bareiss_echelon(Mat& m, int& swaps) {
    std::vector<int> piv_cols;
    swaps = 0;
    Rational prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
            ++swaps;
        }
        for (int i = row + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        piv_cols.push_back(col);
        ++row;
    }
    return piv_cols;
}

}  // namespace detail

inline int rank(Mat m) {
    int swaps;
    return static_cast<int>(detail::bareiss_echelon(m, swaps).size());
}

inline Rational det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    if (m.rows() == 0) return 1;
    int swaps;
    auto piv = detail::bareiss_echelon(m, swaps);
    if (static_cast<int>(piv.size()) < m.rows()) return 0;
    Rational d = m.at(m.rows() - 1, m.cols() - 1);
    return (swaps % 2) ? -d : d;
}

/* basis of the right kernel; empty when the matrix has full column rank */
inline std::vector<std::vector<Rational>> kernel_basis(Mat m) {
    int swaps;
    auto piv = detail::bareiss_echelon(m, swaps);
    int r = static_cast<int>(piv.size());
    std::vector<char> is_piv(m.cols(), 0);
    for (int c : piv) is_piv[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[fc] = 1;
        for (int k = r - 1; k >= 0; --k) {
            Rational s = 0;
            for (int j = piv[k] + 1; j < m.cols(); ++j)
                if (v[j] != 0) s += m.at(k, j) * v[j];
            v[piv[k]] = -s / m.at(k, piv[k]);
        }
        /* clear denominators so kernel vectors read as plain integers when possible */
        Int l = 1;
        for (const auto& q : v) {
            Int d = q.get_den();
            l = l / gcd(l, d) * d;
        }
        for (auto& q : v) q *= Rational(l);
        basis.push_back(std::move(v));
    }
    return basis;
}

/* one solution of A x = b (free variables set to zero), or nullopt if inconsistent */
inline std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    int swaps;
    auto piv = detail::bareiss_echelon(aug, swaps);
    for (int c : piv)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
    int r = static_cast<int>(piv.size());
    std::vector<Rational> x(a.cols(), Rational(0));
    for (int k = r - 1; k >= 0; --k) {
        Rational s = aug.at(k, a.cols());
        for (int j = piv[k] + 1; j < a.cols(); ++j)
            if (x[j] != 0) s -= aug.at(k, j) * x[j];
        x[piv[k]] = s / aug.at(k, piv[k]);
    }
    return x;
}

}  // namespace waring
