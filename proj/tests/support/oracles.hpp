// Independent brute-force oracles used by the test suites. These deliberately
// avoid the library's lattice/estimator code path: plain quadrature over the
// positive quadrant (with the substitution x = u^2 to tame the integrable
// singularity at the axes) and midpoint quadrature over the segment.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "boojum/special_fn.hpp"

namespace oracles {

// log of integral over (0, radius]^2 of x1^a x2^a2 B(x)^-m exp(-r1 x1 - r2 x2).
// Midpoint rule in u with x = u^2, n points per axis.
inline double log_integral_quadrant_2d(double m, double r1, double r2, double radius,
                                       int n, int a1 = 0, int a2 = 0) {
  const double umax = std::sqrt(radius);
  const double h = umax / n;
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double u1 = (i + 0.5) * h;
    const double x1 = u1 * u1;
    const double lg1 = std::lgamma(x1);
    for (int j = 0; j < n; ++j) {
      const double u2 = (j + 0.5) * h;
      const double x2 = u2 * u2;
      const double log_beta = lg1 + std::lgamma(x2) - std::lgamma(x1 + x2);
      double v = -m * log_beta - r1 * x1 - r2 * x2;
      v += std::log(4.0 * u1 * u2 * h * h);
      if (a1 > 0) v += a1 * std::log(x1);
      if (a2 > 0) v += a2 * std::log(x2);
      logs.push_back(v);
    }
  }
  return boojum::log_sum_exp(logs);
}

inline double log_z_quadrature_2d(double m, double r1, double r2, double radius = 40.0,
                                  int n = 1500) {
  return log_integral_quadrant_2d(m, r1, r2, radius, n);
}

// log of the conditional normalizer Zbar(s) for K = 2 by midpoint quadrature
// over the segment t = (t1, 1 - t1).
inline double log_zbar_quadrature_1d(double m, double r1, double r2, double s, int n) {
  const double h = 1.0 / n;
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t1 = (i + 0.5) * h;
    const double t2 = 1.0 - t1;
    const double log_beta =
        std::lgamma(s * t1) + std::lgamma(s * t2) - std::lgamma(s);
    logs.push_back(-m * log_beta - s * (r1 * t1 + r2 * t2) + std::log(h));
  }
  return boojum::log_sum_exp(logs);
}

// Direct lattice-sum oracle: exhaustive enumeration via log_sum_exp of
// per-point products, for comparison with the convolution evaluation.
inline double simplex_sum_by_enumeration(const std::vector<std::vector<double>>& weights,
                                         const std::vector<std::vector<int>>& points) {
  std::vector<double> logs;
  logs.reserve(points.size());
  for (const auto& point : points) {
    double acc = 0.0;
    for (std::size_t k = 0; k < point.size(); ++k) acc += weights[k][point[k]];
    logs.push_back(acc);
  }
  return boojum::log_sum_exp(logs);
}

}  // namespace oracles
