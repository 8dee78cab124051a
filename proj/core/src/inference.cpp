#include "boojum/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace boojum {

namespace {

constexpr double kSimplexTolerance = 1e-12;
constexpr double kRelativeStep = 1e-3;

// Estimate with the pivot pinned by the caller; throws on improper shifts so
// finite differences never silently straddle the properness boundary.
double pinned_log_z(const BoojumParams& params, const EstimatorConfig& config) {
  return estimate_log_z(params, config).log_z;
}

EstimatorConfig pin_rho(const BoojumParams& params, const EstimatorConfig& config) {
  EstimatorConfig pinned = config;
  pinned.rho = resolve_rho(config, params);
  return pinned;
}

void require_proper(const BoojumParams& params, const char* what) {
  const PropernessVerdict verdict = classify(params);
  if (!verdict.proper) {
    throw ImproperParameterError(std::string(what) + ": improper parameters (" +
                                 to_string(verdict.reason) + ")");
  }
}

}  // namespace

void validate(const DirichletObservation& obs) {
  if (obs.y.empty()) {
    throw std::invalid_argument("DirichletObservation: empty observation");
  }
  double sum = 0.0;
  for (double v : obs.y) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(
          "DirichletObservation: components must be strictly positive");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw std::invalid_argument("DirichletObservation: components must sum to 1");
  }
}

BoojumParams posterior(const BoojumParams& prior,
                       const std::vector<DirichletObservation>& observations) {
  validate(prior);
  BoojumParams post = prior;
  for (const DirichletObservation& obs : observations) {
    validate(obs);
    if (obs.y.size() != prior.r.size()) {
      throw std::invalid_argument("posterior: observation dimension mismatch");
    }
    post.m += 1.0;
    for (std::size_t k = 0; k < post.r.size(); ++k) post.r[k] -= std::log(obs.y[k]);
  }
  return post;
}

double log_mgf(const BoojumParams& params, const std::vector<double>& v,
               const EstimatorConfig& config) {
  validate(params);
  if (v.size() != params.r.size()) {
    throw std::invalid_argument("log_mgf: shift dimension mismatch");
  }
  require_proper(params, "log_mgf");
  BoojumParams shifted = params;
  for (std::size_t k = 0; k < v.size(); ++k) shifted.r[k] -= v[k];
  require_proper(shifted, "log_mgf (shifted parameters)");
  const EstimatorConfig pinned = pin_rho(params, config);
  return pinned_log_z(shifted, pinned) - pinned_log_z(params, pinned);
}

std::vector<double> mean(const BoojumParams& params, const EstimatorConfig& config) {
  validate(params);
  require_proper(params, "mean");
  const EstimatorConfig pinned = pin_rho(params, config);
  std::vector<double> out(params.r.size());
  for (std::size_t k = 0; k < params.r.size(); ++k) {
    const double eps = kRelativeStep * params.r[k];
    if (!(params.r[k] - eps > 0.0)) {
      throw std::domain_error("mean: finite-difference step leaves the positive orthant");
    }
    BoojumParams plus = params;
    BoojumParams minus = params;
    plus.r[k] += eps;
    minus.r[k] -= eps;
    require_proper(plus, "mean (perturbed parameters)");
    require_proper(minus, "mean (perturbed parameters)");
    out[k] = -(pinned_log_z(plus, pinned) - pinned_log_z(minus, pinned)) / (2.0 * eps);
  }
  return out;
}

double moment(const BoojumParams& params, const MomentRequest& request,
              const EstimatorConfig& config) {
  validate(params);
  if (request.order.size() != params.r.size()) {
    throw std::invalid_argument("moment: order dimension mismatch");
  }
  for (int n : request.order) {
    if (n < 0) throw std::invalid_argument("moment: order entries must be nonnegative");
  }
  const int total = std::accumulate(request.order.begin(), request.order.end(), 0);
  if (total > 2) {
    throw UnsupportedOrderError("moment: total order above 2 unsupported");
  }
  require_proper(params, "moment");
  if (total == 0) return 1.0;

  if (total == 1) {
    const auto it = std::find(request.order.begin(), request.order.end(), 1);
    const std::size_t k = static_cast<std::size_t>(it - request.order.begin());
    return mean(params, config)[k];
  }

  // Total order 2: second central differences of Z around the center, on the
  // ratio scale exp(log Z(perturbed) - log Z(center)); sign (-1)^2 = +1.
  const EstimatorConfig pinned = pin_rho(params, config);
  const double center = pinned_log_z(params, pinned);
  auto shifted_ratio = [&](std::size_t k1, double d1, std::size_t k2, double d2) {
    BoojumParams shifted = params;
    shifted.r[k1] += d1;
    shifted.r[k2] += d2;
    require_proper(shifted, "moment (perturbed parameters)");
    return std::exp(pinned_log_z(shifted, pinned) - center);
  };

  std::size_t first = 0;
  while (request.order[first] == 0) ++first;
  const double eps1 = kRelativeStep * params.r[first];
  if (request.order[first] == 2) {
    return (shifted_ratio(first, eps1, first, 0.0) + shifted_ratio(first, -eps1, first, 0.0) -
            2.0) /
           (eps1 * eps1);
  }
  std::size_t second = first + 1;
  while (request.order[second] == 0) ++second;
  const double eps2 = kRelativeStep * params.r[second];
  return (shifted_ratio(first, eps1, second, eps2) - shifted_ratio(first, eps1, second, -eps2) -
          shifted_ratio(first, -eps1, second, eps2) +
          shifted_ratio(first, -eps1, second, -eps2)) /
         (4.0 * eps1 * eps2);
}

}  // namespace boojum
