#include "boojum/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace boojum {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be a finite positive real, got " +
                            std::to_string(x));
  }
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("digamma: argument must be a finite positive real, got " +
                            std::to_string(x));
  }
  // Shift into the asymptotic range, then the Bernoulli-number series.
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double log_multivariate_beta(const std::vector<double>& x) {
  if (x.empty()) {
    throw std::domain_error("log_multivariate_beta: empty argument");
  }
  double sum = 0.0;
  double acc = 0.0;
  for (double v : x) {
    acc += log_gamma(v);  // validates positivity per entry
    sum += v;
  }
  return acc - log_gamma(sum);
}

double log_sum_exp(const std::vector<double>& v) {
  if (v.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  for (double e : v) {
    if (std::isnan(e) || e == std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument("log_sum_exp: +inf or NaN entry");
    }
  }
  return detail::lse_unchecked(v.data(), v.size());
}

namespace detail {

double lse_unchecked(const double* v, std::size_t n) {
  double m = kNegInf;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, v[i]);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

}  // namespace detail

}  // namespace boojum
