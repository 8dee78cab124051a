#include "boojum/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "boojum/lattice.hpp"
#include "boojum/special_fn.hpp"

namespace boojum {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_positive_vector(const std::vector<double>& x, const char* what) {
  if (x.empty()) {
    throw std::domain_error(std::string(what) + ": empty vector");
  }
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error(std::string(what) + ": entries must be finite and positive");
    }
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform in the open interval (0, 1).
double uniform_open(std::uint64_t& state) {
  return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1p-53;
}

}  // namespace

RadialPoint radial_decompose(const std::vector<double>& x) {
  check_positive_vector(x, "radial_decompose");
  double s = 0.0;
  for (double v : x) s += v;
  RadialPoint point;
  point.total = s;
  point.simplex.reserve(x.size());
  for (double v : x) point.simplex.push_back(v / s);
  return point;
}

std::vector<double> radial_recompose(const RadialPoint& point) {
  if (!(point.total > 0.0) || point.simplex.empty()) {
    throw std::domain_error("radial_recompose: invalid radial point");
  }
  std::vector<double> x;
  x.reserve(point.simplex.size());
  for (double t : point.simplex) x.push_back(point.total * t);
  return x;
}

double log_unnormalized_density(const BoojumParams& params, const std::vector<double>& x) {
  validate(params);
  check_positive_vector(x, "log_unnormalized_density");
  if (x.size() != params.r.size()) {
    throw std::invalid_argument("log_unnormalized_density: dimension mismatch");
  }
  double dot = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) dot += params.r[k] * x[k];
  const double beta = params.m == 0.0 ? 0.0 : log_multivariate_beta(x);
  return -params.m * beta - dot;
}

void validate(const EstimatorConfig& config) {
  if (config.grid_n < 2) {
    throw std::invalid_argument("EstimatorConfig: grid_n must be >= 2");
  }
  if (config.samples_p < 1) {
    throw std::invalid_argument("EstimatorConfig: samples_p must be >= 1");
  }
  if (config.rho && !(*config.rho > 0.0)) {
    throw std::invalid_argument("EstimatorConfig: explicit rho must be > 0");
  }
}

double resolve_rho(const EstimatorConfig& config, const BoojumParams& params) {
  if (config.rho) return *config.rho;
  validate(params);
  const double min_r = *std::min_element(params.r.begin(), params.r.end());
  if (!(min_r > 0.0)) {
    throw std::invalid_argument("resolve_rho: auto pivot requires a positive rate vector");
  }
  return 0.5 * min_r;
}

std::vector<double> gamma_pivot_samples(int shape_k, double rho, std::uint64_t seed,
                                        int count) {
  if (shape_k < 1 || count < 0 || !(rho > 0.0)) {
    throw std::invalid_argument("gamma_pivot_samples: bad arguments");
  }
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    // Counter-based substream: the p-th sample depends on (seed, p) only.
    std::uint64_t state =
        seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(p) + 1));
    double acc = 0.0;
    for (int k = 0; k < shape_k; ++k) acc -= std::log(uniform_open(state));
    samples.push_back(acc / rho);
  }
  return samples;
}

double log_zbar(const BoojumParams& params, double s, int grid_n) {
  validate(params);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("log_zbar: s must be finite and positive");
  }
  if (grid_n < 2) {
    throw std::invalid_argument("log_zbar: grid_n must be >= 2");
  }
  const int n = grid_n;
  const int dim = params.dimension();
  const double m = params.m;

  // log Gamma(s n/N) is shared across coordinates.
  std::vector<double> lg(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 1; i <= n; ++i) lg[i] = std::lgamma(s * i / n);

  std::vector<LogWeights> weights(dim, LogWeights(static_cast<std::size_t>(n) + 1));
  for (int k = 0; k < dim; ++k) {
    LogWeights& w = weights[k];
    w[0] = m == 0.0 ? 0.0 : kNegInf;  // t_k = 0 boundary, zero weight
    const double rk = params.r[k];
    for (int i = 1; i <= n; ++i) {
      w[i] = -m * lg[i] - rk * s * i / n;
    }
  }
  const LatticeSpec spec{n, dim};
  return m * std::lgamma(s) + integrate_simplex(weights, spec);
}

LogZEstimate estimate_log_z(const BoojumParams& params, const EstimatorConfig& config,
                            bool allow_improper) {
  validate(config);
  const PropernessVerdict verdict = classify(params);
  if (!verdict.proper && !allow_improper) {
    std::string msg = "estimate_log_z: improper parameters (" + to_string(verdict.reason);
    if (verdict.t_value) msg += ", T = " + std::to_string(*verdict.t_value) + " >= 1";
    msg += ")";
    throw ImproperParameterError(msg);
  }
  const double rho = resolve_rho(config, params);
  const int dim = params.dimension();
  const int count = config.samples_p;

  const std::vector<double> s =
      gamma_pivot_samples(dim, rho, config.seed, count);
  std::vector<double> terms(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    terms[p] = log_zbar(params, s[p], config.grid_n) + rho * s[p];
  }

  const double peak = *std::max_element(terms.begin(), terms.end());
  if (peak == kNegInf) {
    throw std::runtime_error(
        "estimate_log_z: all per-sample terms vanished; resolution too coarse");
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  const double mean_w = sum / count;
  double var = 0.0;
  for (double t : terms) {
    const double d = std::exp(t - peak) - mean_w;
    var += d * d;
  }
  const double sd = count > 1 ? std::sqrt(var / (count - 1)) : 0.0;

  LogZEstimate estimate;
  estimate.log_z = std::lgamma(static_cast<double>(dim)) - std::log(static_cast<double>(count)) -
                   dim * std::log(rho) + peak + std::log(sum);
  estimate.std_err = sd / (std::sqrt(static_cast<double>(count)) * mean_w);
  estimate.config = config;
  estimate.config.rho = rho;
  return estimate;
}

std::vector<LogZEstimate> divergence_probe(const BoojumParams& params,
                                           const std::vector<EstimatorConfig>& configs) {
  std::vector<LogZEstimate> out;
  out.reserve(configs.size());
  for (const EstimatorConfig& config : configs) {
    out.push_back(estimate_log_z(params, config, /*allow_improper=*/true));
  }
  return out;
}

}  // namespace boojum
