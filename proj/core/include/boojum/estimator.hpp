#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boojum/params.hpp"

namespace boojum {

// (s, t) decomposition of x in the positive orthant: s is the coordinate sum
// and t the normalized point on the simplex. Jacobian of the change of
// variables is s^(K-1).
struct RadialPoint {
  double total = 0.0;            // s > 0
  std::vector<double> simplex;   // t, nonnegative, sums to 1
};

RadialPoint radial_decompose(const std::vector<double>& x);
std::vector<double> radial_recompose(const RadialPoint& point);

// -m log B(x) - sum_k r_k x_k. Properness of params is not required.
double log_unnormalized_density(const BoojumParams& params, const std::vector<double>& x);

struct EstimatorConfig {
  int grid_n = 500;             // lattice resolution N >= 2
  int samples_p = 2000;         // Gamma sample count P >= 1
  std::optional<double> rho;    // pivot; empty means auto = 0.5 * min_k r_k
  std::uint64_t seed = 0;
};

void validate(const EstimatorConfig& config);

// The pivot actually used: the explicit value, or 0.5 * min_k r_k when auto.
double resolve_rho(const EstimatorConfig& config, const BoojumParams& params);

struct LogZEstimate {
  double log_z = 0.0;
  double std_err = 0.0;        // log-scale Monte Carlo standard error
  EstimatorConfig config;      // echo, with rho resolved
};

struct ImproperParameterError : std::domain_error {
  using std::domain_error::domain_error;
};

// Gamma(shape_k, rho) variates via the sum of shape_k exponentials, one
// deterministic substream per sample index.
std::vector<double> gamma_pivot_samples(int shape_k, double rho, std::uint64_t seed,
                                        int count);

// Lattice approximation of log Zbar(s), the conditional normalizer at total
// mass s: m log Gamma(s) plus the simplex integral of
// exp(-m log Gamma(s t_k) - r_k s t_k). Boundary lattice points (t_k = 0)
// get zero weight; for -1 < m < 0 this under-counts an integrable
// singularity by a bias that vanishes as grid_n grows.
double log_zbar(const BoojumParams& params, double s, int grid_n);

// Gamma-pivot Monte Carlo estimate of log Z(m, r). Rejects improper
// parameters unless allow_improper is set (divergence probing). Identical
// (params, config) inputs give bit-identical results.
LogZEstimate estimate_log_z(const BoojumParams& params, const EstimatorConfig& config,
                            bool allow_improper = false);

// Runs estimate_log_z with the improper override at each config and returns
// the raw sequence; no verdict is made. For improper parameters the
// estimates are expected to grow without stabilizing as the configs extend
// the sampled s-range.
std::vector<LogZEstimate> divergence_probe(const BoojumParams& params,
                                           const std::vector<EstimatorConfig>& configs);

}  // namespace boojum
