#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "waring/binary_form.hpp"

namespace waring {

struct OracleResult {
    bool achieved = false;
    double best_residual = 0.0;
};

namespace detail {

/*
 * Best-fit residual for directions given by angles: each angle theta yields
 * the unit direction (cos theta, sin theta), the scalars are projected out by
 * linear least squares, and the score is the relative coefficient-space error.
 * Projecting the scalars makes sign choices and magnitudes a solved problem,
 * so the nonlinear search runs over angles alone.
 */
inline double angles_residual(const std::vector<double>& theta, const Eigen::VectorXd& target,
                              int d) {
    int r = static_cast<int>(theta.size());
    Eigen::MatrixXd a(d + 1, r);
    for (int j = 0; j < r; ++j) {
        double c = std::cos(theta[j]), s = std::sin(theta[j]);
        for (int i = 0; i <= d; ++i)
            a(i, j) = static_cast<double>(binom(d, i)) * std::pow(c, d - i) * std::pow(s, i);
    }
    Eigen::VectorXd coeff = a.colPivHouseholderQr().solve(target);
    return (a * coeff - target).norm() / target.norm();
}

/* Nelder–Mead over the angle vector; small, deterministic, derivative-free */
inline double nelder_mead_angles(std::vector<double> start, const Eigen::VectorXd& target, int d,
                                 int iterations) {
    int n = static_cast<int>(start.size());
    std::vector<std::vector<double>> simplex(n + 1, start);
    std::vector<double> score(n + 1);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += 0.35;
    for (int i = 0; i <= n; ++i) score[i] = angles_residual(simplex[i], target, d);

    std::vector<int> order(n + 1);
    for (int it = 0; it < iterations; ++it) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) { return score[x] < score[y]; });
        if (score[order[0]] < 1e-12 || score[order[n]] - score[order[0]] < 1e-15) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) centroid[k] += simplex[order[i]][k] / n;
        auto blend = [&](double w) {
            std::vector<double> p(n);
            for (int k = 0; k < n; ++k) p[k] = centroid[k] + w * (centroid[k] - simplex[order[n]][k]);
            return p;
        };

        auto reflected = blend(1.0);
        double fr = angles_residual(reflected, target, d);
        if (fr < score[order[0]]) {
            auto expanded = blend(2.0);
            double fe = angles_residual(expanded, target, d);
            if (fe < fr) { simplex[order[n]] = expanded; score[order[n]] = fe; }
            else         { simplex[order[n]] = reflected; score[order[n]] = fr; }
        } else if (fr < score[order[n - 1]]) {
            simplex[order[n]] = reflected;
            score[order[n]] = fr;
        } else {
            auto contracted = blend(-0.5);
            double fc = angles_residual(contracted, target, d);
            if (fc < score[order[n]]) {
                simplex[order[n]] = contracted;
                score[order[n]] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int k = 0; k < n; ++k)
                        simplex[order[i]][k] = 0.5 * (simplex[order[i]][k] + simplex[order[0]][k]);
                    score[order[i]] = angles_residual(simplex[order[i]], target, d);
                }
            }
        }
    }
    return *std::min_element(score.begin(), score.end());
}

}  // namespace detail

/*
 * Can f be written as a sum of r signed d-th powers numerically?  Multi-start
 * angle optimization with scalars solved by least squares at every step;
 * achieved means relative residual below 1e-8.  Deterministic for a fixed
 * seed; a false answer is a legitimate result, not an error.
 */
inline OracleResult numeric_rank_oracle(const BinaryForm& f, int r, int restarts = 24,
                                        std::uint64_t seed = 0x5eed) {
    if (f.is_zero() || r < 1) throw std::invalid_argument("oracle needs a nonzero form and r >= 1");
    int d = f.degree();
    Eigen::VectorXd target(d + 1);
    for (int i = 0; i <= d; ++i) target(i) = to_double(f.monomial(i));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 3.14159265358979323846);
    OracleResult out;
    out.best_residual = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<double> theta(r);
        if (attempt == 0)
            for (int j = 0; j < r; ++j) theta[j] = (j + 1) * 3.14159265358979323846 / (r + 1);
        else
            for (double& t : theta) t = unif(rng);
        double res = detail::nelder_mead_angles(theta, target, d, 260 * r);
        out.best_residual = std::min(out.best_residual, res);
        if (out.best_residual < 1e-10) break;
    }
    out.achieved = out.best_residual < 1e-8;
    return out;
}

}  // namespace waring
