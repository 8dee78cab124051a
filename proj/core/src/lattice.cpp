#include "boojum/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "boojum/special_fn.hpp"

namespace boojum {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_entries(const LogWeights& w, const char* what) {
  if (w.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty weight vector");
  }
  for (double e : w) {
    if (std::isnan(e) || e == std::numeric_limits<double>::infinity()) {
      throw std::invalid_argument(std::string(what) + ": +inf or NaN weight entry");
    }
  }
}

// Entry n of the truncated convolution of two validated operands.
double conv_entry(const LogWeights& a, const LogWeights& b, std::size_t n,
                  std::vector<double>& row) {
  row.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = a[j] + b[n - j];
  return detail::lse_unchecked(row.data(), row.size());
}

}  // namespace

void validate(const LatticeSpec& spec) {
  if (spec.resolution < 1 || spec.dimension < 1) {
    throw std::invalid_argument("LatticeSpec: require N >= 1 and K >= 1");
  }
}

std::uint64_t lattice_count(const LatticeSpec& spec) {
  validate(spec);
  const std::uint64_t n = static_cast<std::uint64_t>(spec.resolution);
  const std::uint64_t k = static_cast<std::uint64_t>(spec.dimension);
  // C(N+K-1, K-1) by the multiplicative formula; every prefix product of
  // binomials is integral, so dividing at each step stays exact.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i < k; ++i) {
    acc = acc * (n + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("lattice_count: count exceeds 64-bit range");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void enumerate_rec(int remaining, int coords_left, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (coords_left == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    enumerate_rec(remaining - v, coords_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_lattice(const LatticeSpec& spec) {
  validate(spec);
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enumerate_rec(spec.resolution, spec.dimension, prefix, out);
  return out;
}

LogWeights log_conv_exp(const LogWeights& a, const LogWeights& b) {
  check_entries(a, "log_conv_exp");
  check_entries(b, "log_conv_exp");
  if (a.size() != b.size()) {
    throw std::invalid_argument("log_conv_exp: operand length mismatch");
  }
  LogWeights c(a.size());
  std::vector<double> row;
  for (std::size_t n = 0; n < a.size(); ++n) c[n] = conv_entry(a, b, n, row);
  return c;
}

double factorized_simplex_sum(const std::vector<LogWeights>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("factorized_simplex_sum: need K >= 1 weight vectors");
  }
  const std::size_t len = weights.front().size();
  for (const LogWeights& w : weights) {
    check_entries(w, "factorized_simplex_sum");
    if (w.size() != len) {
      throw std::invalid_argument("factorized_simplex_sum: weight length mismatch");
    }
  }
  const std::size_t last = len - 1;
  if (weights.size() == 1) return weights[0][last];
  // Left fold; only entry N of the final convolution is needed.
  LogWeights acc = weights[0];
  for (std::size_t k = 1; k + 1 < weights.size(); ++k) acc = log_conv_exp(acc, weights[k]);
  std::vector<double> row;
  return conv_entry(acc, weights.back(), last, row);
}

double integrate_simplex(const std::vector<LogWeights>& weights, const LatticeSpec& spec) {
  validate(spec);
  if (static_cast<int>(weights.size()) != spec.dimension) {
    throw std::invalid_argument("integrate_simplex: weight count must equal K");
  }
  for (const LogWeights& w : weights) {
    if (w.size() != static_cast<std::size_t>(spec.resolution) + 1) {
      throw std::invalid_argument("integrate_simplex: weight length must be N+1");
    }
  }
  const double log_s = factorized_simplex_sum(weights);
  if (log_s == kNegInf) return kNegInf;
  return log_s - (spec.dimension - 1) * std::log(static_cast<double>(spec.resolution));
}

}  // namespace boojum
