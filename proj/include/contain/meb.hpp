#pragma once

#include <vector>

#include "contain/geometry.hpp"

namespace contain {

struct EnclosingBall {
  Point center;
  double radius = 0.0;
  // Indices of the points whose circumsphere (within their affine hull)
  // defines the ball; at most dim+1 of them.
  std::vector<int> support;
};

// Smallest Euclidean ball containing all points. Welzl-style move-to-front
// recursion over support sets, followed by a verification sweep that restarts
// from any point left outside by rounding.
EnclosingBall exact_meb(const PointSet& points);

}  // namespace contain
