#pragma once

#include <vector>

#include "contain/geometry.hpp"
#include "contain/radii.hpp"

namespace contain {

struct CoreSet {
  std::vector<int> indices;
  double radius = 0.0;   // R(S, C)
  Point center;          // a center of S
  double eps_achieved = 0.0;
  // When set, P lies in center + (1 + eps_achieved) * radius * C.
  bool center_conform = false;
};

// Farthest-point greedy: start from a double-farthest pair, add the point of
// largest covering deficiency gauge(C, p - c_S) until (1+eps)*R(S) covers P.
// After dim+2 additions the exact zero core-set is returned instead.
CoreSet greedy_coreset(const PointSet& points, const Container& c, double eps,
                       const Tolerance& tol = {});

// At most dim+1 points with R(S, C) = R(P, C), read off the optimal duals
// (or the enclosing-ball support) and reduced further if degenerate.
CoreSet extract_zero_coreset(const PointSet& points, const Container& c,
                             const Tolerance& tol = {});

// Smallest k+1 with R(P, C) <= (1 + eps) R_k(P, C).
int optimal_coreset_size(const PointSet& points, const Container& c, double eps,
                         const Tolerance& tol = {},
                         const EnumerationOptions& opts = {});

enum class CenterMode {
  // Search the whole set of optimal centers of S for one covering P.
  kSearch,
  // Commit to the center the solver returns for S.
  kFixed,
};

bool validate_coreset(const PointSet& points, const Container& c,
                      const std::vector<int>& subset, double eps,
                      bool require_center_conform, const Tolerance& tol = {},
                      CenterMode mode = CenterMode::kSearch);

// Checks P within c_S + (1 + eps + sqrt(2 eps + eps^2)) R(S) B.
bool center_conformity_bound_check(const PointSet& points,
                                   const std::vector<int>& subset, double eps,
                                   const Tolerance& tol = {});
bool center_conformity_bound_check(const PointSet& points, const Container& c,
                                   const std::vector<int>& subset, double eps,
                                   const Tolerance& tol = {});

// Factor 1 + eps + sqrt(2 eps + eps^2).
double center_conformity_factor(double eps);

}  // namespace contain
