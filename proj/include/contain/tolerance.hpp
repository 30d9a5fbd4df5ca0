#pragma once

#include <algorithm>

#include "contain/errors.hpp"

namespace contain {

// Numerical slack used across the library.
//   feas  - constraint violation accepted as feasible
//   pivot - smallest admissible simplex pivot / rank threshold
//   eq    - slack when comparing computed values
struct Tolerance {
  double feas = 1e-7;
  double pivot = 1e-9;
  double eq = 1e-6;

  void validate() const {
    require(0.0 < pivot && pivot <= feas && feas <= eq && eq < 1.0,
            ErrorCode::kInvalidArgument,
            "tolerance must satisfy 0 < pivot <= feas <= eq < 1");
  }

  // Slack relative to the magnitude of the compared quantity.
  double feas_at(double scale) const { return feas * std::max(1.0, scale); }
  double eq_at(double scale) const { return eq * std::max(1.0, scale); }
};

}  // namespace contain
