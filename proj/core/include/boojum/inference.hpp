#pragma once

#include <stdexcept>
#include <vector>

#include "boojum/estimator.hpp"
#include "boojum/params.hpp"

namespace boojum {

// A point of the simplex interior: every component strictly positive,
// components summing to 1 (tolerance 1e-12).
struct DirichletObservation {
  std::vector<double> y;
};

void validate(const DirichletObservation& obs);

struct MomentRequest {
  std::vector<int> order;  // multi-index, total order <= 2
};

struct UnsupportedOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Conjugate update: (m, r) plus N observations gives
// (m + N, r - sum_n log y_n). Pure arithmetic; a proper prior yields a
// proper posterior.
BoojumParams posterior(const BoojumParams& prior,
                       const std::vector<DirichletObservation>& observations);

// log phi(v) = log Z(m, r - v) - log Z(m, r), both normalizers estimated
// with common random numbers (same pivot, same seed, same s draws).
double log_mgf(const BoojumParams& params, const std::vector<double>& v,
               const EstimatorConfig& config);

// E[Boojum(m, r)] = -grad_r log Z(m, r), by central finite differences with
// per-coordinate step 1e-3 * r_k and common random numbers.
std::vector<double> mean(const BoojumParams& params, const EstimatorConfig& config);

// Moments up to total order 2. First order delegates to mean; second order
// uses second central differences of Z (not log Z) divided by Z, with common
// random numbers. Higher orders throw UnsupportedOrderError.
double moment(const BoojumParams& params, const MomentRequest& request,
              const EstimatorConfig& config);

}  // namespace boojum
