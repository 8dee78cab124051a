#pragma once

#include <cstddef>
#include <vector>

namespace boojum {

// log Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// Psi(x) = d/dx log Gamma(x) for x > 0. Throws std::domain_error otherwise.
double digamma(double x);

// log B(x) = sum_k log Gamma(x_k) - log Gamma(sum_k x_k).
// Every entry must be strictly positive, length >= 1.
double log_multivariate_beta(const std::vector<double>& x);

// log sum_i exp(v_i), max-shifted. -inf entries are allowed (they contribute
// zero); an all -inf input yields -inf. Throws on empty input or any
// +inf/NaN entry.
double log_sum_exp(const std::vector<double>& v);

namespace detail {

// Unvalidated kernel shared by the lattice convolution; entries must be
// finite or -inf.
double lse_unchecked(const double* v, std::size_t n);

}  // namespace detail

}  // namespace boojum
