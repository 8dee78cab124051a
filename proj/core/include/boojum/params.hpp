#pragma once

#include <optional>
#include <string>
#include <vector>

namespace boojum {

// The (m, r) parameter pair. Improper parameter values are representable on
// purpose; properness is a classification, not a construction constraint.
struct BoojumParams {
  double m = 0.0;              // shape
  std::vector<double> r;       // rate vector, length K >= 1

  int dimension() const { return static_cast<int>(r.size()); }
};

// Throws std::invalid_argument unless m is finite, r is non-empty and every
// r_k is finite.
void validate(const BoojumParams& params);

enum class PropernessReason {
  RateNonpositive,
  ShapeAtOrBelowMinusOne,
  BoundaryTAtLeastOne,
  Proper,
};

std::string to_string(PropernessReason reason);

struct PropernessVerdict {
  bool proper = false;
  PropernessReason reason = PropernessReason::Proper;
  // T = sum_k exp(-r_k/m); present iff m > 0 and every r_k > 0.
  std::optional<double> t_value;
};

// Exact properness test: proper iff r > 0, m > -1, and (m <= 0 or T < 1).
// T = 1 exactly classifies as improper. The verdict records the first failed
// condition in the order RateNonpositive -> ShapeAtOrBelowMinusOne ->
// BoundaryTAtLeastOne.
PropernessVerdict classify(const BoojumParams& params);

// 1 - T when m > 0 and r > 0; empty otherwise. Positive for proper
// parameters, zero or negative for improper ones. No epsilon is applied
// anywhere; callers wanting a tolerance apply it to this raw margin.
std::optional<double> boundary_margin(const BoojumParams& params);

}  // namespace boojum
