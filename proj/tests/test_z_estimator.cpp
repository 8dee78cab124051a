#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boojum/estimator.hpp"
#include "boojum/params.hpp"
#include "support/oracles.hpp"

using boojum::BoojumParams;
using boojum::estimate_log_z;
using boojum::EstimatorConfig;
using boojum::gamma_pivot_samples;
using boojum::log_unnormalized_density;
using boojum::log_zbar;
using boojum::LogZEstimate;
using boojum::radial_decompose;
using boojum::radial_recompose;

TEST_CASE("radial_decompose spec cases") {
  auto p = radial_decompose({2.0, 2.0});
  CHECK(p.total == doctest::Approx(4.0));
  CHECK(p.simplex[0] == doctest::Approx(0.5));
  CHECK(p.simplex[1] == doctest::Approx(0.5));

  p = radial_decompose({1.0, 2.0, 3.0});
  CHECK(p.total == doctest::Approx(6.0));
  CHECK(p.simplex[0] == doctest::Approx(1.0 / 6.0));
  CHECK(p.simplex[1] == doctest::Approx(1.0 / 3.0));
  CHECK(p.simplex[2] == doctest::Approx(0.5));

  p = radial_decompose({5.0});
  CHECK(p.total == doctest::Approx(5.0));
  CHECK(p.simplex[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(radial_decompose({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(radial_decompose({}), std::domain_error);
}

TEST_CASE("radial round trip") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> entry(1e-4, 50.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 5);
    std::vector<double> x(dim);
    for (double& v : x) v = entry(rng);
    const auto point = radial_decompose(x);
    double sum = 0.0;
    for (double t : point.simplex) sum += t;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    const auto back = radial_recompose(point);
    for (int k = 0; k < dim; ++k) {
      CHECK(std::abs(back[k] - x[k]) <= 1e-14 * x[k]);
    }
  }
}

TEST_CASE("log_unnormalized_density spec cases") {
  CHECK(log_unnormalized_density({0.0, {2.0, 5.0}}, {1.0, 1.5}) ==
        doctest::Approx(-(2.0 + 7.5)).epsilon(1e-12));
  CHECK(log_unnormalized_density({1.0, {0.0, 0.0}}, {1.0, 1.0}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(log_unnormalized_density({2.0, {1.0, 1.0}}, {2.0, 3.0}) ==
        doctest::Approx(-2.0 * std::log(1.0 / 12.0) - 5.0).epsilon(1e-10));
  CHECK_THROWS_AS(log_unnormalized_density({1.0, {1.0}}, {-1.0}), std::domain_error);
}

TEST_CASE("log_zbar against closed forms at m = 0") {
  // K=2, r=(1,1), s=1: Zbar = exp(-1).
  CHECK(log_zbar({0.0, {1.0, 1.0}}, 1.0, 1000) == doctest::Approx(-1.0).epsilon(0.01));
  // K=2, r=(1,2), s=2: Zbar = (exp(-2) - exp(-4)) / 2.
  CHECK(log_zbar({0.0, {1.0, 2.0}}, 2.0, 1000) ==
        doctest::Approx(std::log((std::exp(-2.0) - std::exp(-4.0)) / 2.0)).epsilon(0.01));
}

TEST_CASE("log_zbar against 1-D quadrature at m = 1") {
  const double oracle = oracles::log_zbar_quadrature_1d(1.0, 3.0, 3.0, 2.0, 200000);
  CHECK(log_zbar({1.0, {3.0, 3.0}}, 2.0, 2000) == doctest::Approx(oracle).epsilon(0.02));
}

TEST_CASE("log_zbar errors") {
  CHECK_THROWS_AS(log_zbar({0.0, {1.0}}, 0.0, 100), std::domain_error);
  CHECK_THROWS_AS(log_zbar({0.0, {1.0}}, -1.0, 100), std::domain_error);
  CHECK_THROWS_AS(log_zbar({0.0, {1.0}}, 1.0, 1), std::invalid_argument);
}

TEST_CASE("gamma pivot sampler moments") {
  const int shape = 3;
  const double rho = 1.5;
  const auto s = gamma_pivot_samples(shape, rho, 99, 100000);
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= s.size();
  double var = 0.0;
  for (double v : s) var += (v - mean) * (v - mean);
  var /= (s.size() - 1);
  // Mean K/rho with sampling sd sqrt(K)/rho/sqrt(P); allow 4 sigma.
  const double mean_sd = std::sqrt(shape) / rho / std::sqrt(100000.0);
  CHECK(std::abs(mean - shape / rho) <= 4.0 * mean_sd);
  CHECK(var == doctest::Approx(shape / (rho * rho)).epsilon(0.05));
}

TEST_CASE("gamma pivot sampler is a deterministic substream") {
  const auto a = gamma_pivot_samples(2, 0.7, 1234, 100);
  const auto b = gamma_pivot_samples(2, 0.7, 1234, 50);
  for (int i = 0; i < 50; ++i) CHECK(a[i] == b[i]);
  const auto c = gamma_pivot_samples(2, 0.7, 1235, 100);
  CHECK(a != c);
}

TEST_CASE("estimate_log_z recovers the m = 0 product law") {
  EstimatorConfig config;
  config.grid_n = 500;
  config.samples_p = 4000;
  config.seed = 42;
  const auto estimate = estimate_log_z({0.0, {2.0, 5.0}}, config);
  CHECK(std::abs(estimate.log_z + std::log(10.0)) <= 0.05);
  CHECK(estimate.std_err >= 0.0);
  REQUIRE(estimate.config.rho.has_value());
  CHECK(*estimate.config.rho == doctest::Approx(1.0));  // auto = 0.5 * min r
}

TEST_CASE("estimate_log_z K = 1 reduction") {
  EstimatorConfig config;
  config.seed = 7;
  const auto estimate = estimate_log_z({0.7, {3.0}}, config);
  CHECK(std::abs(estimate.log_z + std::log(3.0)) <= 0.05);
}

TEST_CASE("estimate_log_z rejects improper parameters without the override") {
  EstimatorConfig config;
  CHECK_THROWS_AS(estimate_log_z({2.0, {1.0, 1.0}}, config),
                  boojum::ImproperParameterError);
  CHECK_NOTHROW(estimate_log_z({2.0, {1.0, 1.0}},
                               EstimatorConfig{100, 50, 0.5, 0},
                               /*allow_improper=*/true));
}

TEST_CASE("seed determinism is bit exact") {
  EstimatorConfig config;
  config.grid_n = 300;
  config.samples_p = 500;
  config.seed = 2024;
  const BoojumParams params{0.5, {2.0, 4.0}};
  const auto a = estimate_log_z(params, config);
  const auto b = estimate_log_z(params, config);
  CHECK(a.log_z == b.log_z);
  CHECK(a.std_err == b.std_err);
  EstimatorConfig other = config;
  other.seed = 2025;
  CHECK(estimate_log_z(params, other).log_z != a.log_z);
}

TEST_CASE("pivot invariance within Monte Carlo error") {
  const BoojumParams params{0.5, {2.0, 2.0}};
  EstimatorConfig config;
  config.grid_n = 400;
  config.samples_p = 4000;
  config.seed = 5;
  config.rho = 0.8;
  const auto a = estimate_log_z(params, config);
  config.rho = 1.6;
  config.seed = 6;
  const auto b = estimate_log_z(params, config);
  CHECK(std::abs(a.log_z - b.log_z) <= 3.0 * (a.std_err + b.std_err) + 0.02);
}

TEST_CASE("resolution consistency on proper parameters") {
  const BoojumParams params{1.0, {3.0, 3.0}};
  auto at = [&](int n) {
    EstimatorConfig config;
    config.grid_n = n;
    config.samples_p = 3000;
    config.seed = 11;
    return estimate_log_z(params, config).log_z;
  };
  const double coarse = std::abs(at(100) - at(200));
  const double fine = std::abs(at(400) - at(800));
  CHECK(fine <= coarse + 1e-6);
}

TEST_CASE("m = 0 product law over random rates") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> rate(0.5, 5.0);
  for (int trial = 0; trial < 4; ++trial) {
    const int dim = 2 + trial % 3;
    BoojumParams params{0.0, {}};
    double expected = 0.0;
    for (int k = 0; k < dim; ++k) {
      params.r.push_back(rate(rng));
      expected -= std::log(params.r.back());
    }
    EstimatorConfig config;
    config.seed = 100 + trial;
    const auto estimate = estimate_log_z(params, config);
    CHECK(std::abs(estimate.log_z - expected) <= 3.0 * estimate.std_err + 0.02);
  }
}

TEST_CASE("divergence_probe returns one estimate per config") {
  const BoojumParams improper{2.0, {1.0, 1.0}};
  std::vector<EstimatorConfig> configs;
  for (int i = 0; i < 3; ++i) {
    EstimatorConfig config;
    config.grid_n = 100 << i;
    config.samples_p = 400;
    config.rho = 0.5 / (1 << i);
    config.seed = 3;
    configs.push_back(config);
  }
  const auto estimates = boojum::divergence_probe(improper, configs);
  REQUIRE(estimates.size() == 3);
  CHECK(estimates[0].log_z < estimates[1].log_z);
  CHECK(estimates[1].log_z < estimates[2].log_z);
}
