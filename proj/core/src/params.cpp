#include "boojum/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boojum {

void validate(const BoojumParams& params) {
  if (params.r.empty()) {
    throw std::invalid_argument("BoojumParams: rate vector must have length >= 1");
  }
  if (!std::isfinite(params.m)) {
    throw std::invalid_argument("BoojumParams: shape m must be finite");
  }
  for (double rk : params.r) {
    if (!std::isfinite(rk)) {
      throw std::invalid_argument("BoojumParams: rate entries must be finite");
    }
  }
}

std::string to_string(PropernessReason reason) {
  switch (reason) {
    case PropernessReason::RateNonpositive: return "RateNonpositive";
    case PropernessReason::ShapeAtOrBelowMinusOne: return "ShapeAtOrBelowMinusOne";
    case PropernessReason::BoundaryTAtLeastOne: return "BoundaryTAtLeastOne";
    case PropernessReason::Proper: return "Proper";
  }
  return "Unknown";
}

namespace {

double boundary_t(const BoojumParams& params) {
  double t = 0.0;
  for (double rk : params.r) t += std::exp(-rk / params.m);
  return t;
}

}  // namespace

PropernessVerdict classify(const BoojumParams& params) {
  validate(params);
  const bool rate_positive =
      std::all_of(params.r.begin(), params.r.end(), [](double rk) { return rk > 0.0; });
  if (!rate_positive) {
    return {false, PropernessReason::RateNonpositive, std::nullopt};
  }
  if (params.m <= -1.0) {
    return {false, PropernessReason::ShapeAtOrBelowMinusOne, std::nullopt};
  }
  if (params.m > 0.0) {
    const double t = boundary_t(params);
    if (t < 1.0) {
      return {true, PropernessReason::Proper, t};
    }
    return {false, PropernessReason::BoundaryTAtLeastOne, t};
  }
  return {true, PropernessReason::Proper, std::nullopt};
}

std::optional<double> boundary_margin(const BoojumParams& params) {
  validate(params);
  if (!(params.m > 0.0)) return std::nullopt;
  if (!std::all_of(params.r.begin(), params.r.end(), [](double rk) { return rk > 0.0; })) {
    return std::nullopt;
  }
  return 1.0 - boundary_t(params);
}

}  // namespace boojum
