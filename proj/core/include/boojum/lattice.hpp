#pragma once

#include <cstdint>
#include <vector>

namespace boojum {

// The grid of nonnegative integer vectors of length K summing to N; scaled
// by 1/N it discretizes the simplex.
struct LatticeSpec {
  int resolution = 1;  // N >= 1
  int dimension = 1;   // K >= 1
};

void validate(const LatticeSpec& spec);

// Vector of log-domain samples f(n/N), n = 0..N. -inf entries mean zero
// weight; +inf and NaN are rejected by the operations below.
using LogWeights = std::vector<double>;

// |grid| = C(N+K-1, K-1), exact. Throws std::overflow_error when the count
// does not fit in 64 bits.
std::uint64_t lattice_count(const LatticeSpec& spec);

// Every nonnegative integer vector of length K summing to N, in
// lexicographic order. Intended as a brute-force oracle; the caller is
// responsible for keeping the count materializable.
std::vector<std::vector<int>> enumerate_lattice(const LatticeSpec& spec);

// Log-domain truncated convolution: c_n = log sum_{j=0..n} exp(a_j + b_{n-j}),
// both operands and the result of length N+1. Associative and commutative.
LogWeights log_conv_exp(const LogWeights& a, const LogWeights& b);

// log S_NK: the lattice sum of the factorized integrand, i.e. entry N of the
// K-fold log-domain convolution of the weight vectors (left fold in index
// order). -inf when the sum is zero.
double factorized_simplex_sum(const std::vector<LogWeights>& weights);

// Finite-N approximation of log of the simplex integral of the factorized
// integrand: log S_NK - (K-1) log N. The Voronoi cell measure is 1.
double integrate_simplex(const std::vector<LogWeights>& weights, const LatticeSpec& spec);

}  // namespace boojum
