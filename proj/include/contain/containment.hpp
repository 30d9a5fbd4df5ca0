#pragma once

#include <variant>
#include <vector>

#include "contain/geometry.hpp"

namespace contain {

// Optimal homothet c + rho*C covering a point set.
//
// The center is one valid optimal center; for polytopal containers the set of
// optimal centers can be a whole face and which member is returned is fixed
// only by the deterministic pivot rule.
struct Solution {
  double rho = 0.0;
  Point center;
  // Points (resp. H-normals) that carry positive optimal dual weight.
  std::vector<int> active_points;
  std::vector<int> active_normals;
  // Optimal dual weight per input point; nonnegative and summing to one
  // whenever rho > 0.
  Eigen::VectorXd duals;
};

// Which LP to use for containers that carry both representations.
enum class Formulation { kAuto, kHRep, kVRep };

Solution min_containment(const PointSet& points, const Container& c,
                         const Tolerance& tol = {},
                         Formulation formulation = Formulation::kAuto);

// Witness of optimality: touching points p_i, outer normals a_i of C at
// (p_i - center)/rho with a_i supporting C, and convex weights with
// sum lambda_i a_i = 0.
struct Certificate {
  Point center;
  double rho = 0.0;
  std::vector<int> touch_indices;
  std::vector<Point> touch_points;
  std::vector<Eigen::VectorXd> normals;
  Eigen::VectorXd lambda;
};

struct NotOptimal {
  enum class Reason {
    // The touching normals can be strictly separated from the origin; moving
    // the center along `direction` strictly lowers the covering radius.
    kCenterImprovable,
    // The center is optimal but the claimed radius exceeds the attained one.
    kRadiusNotTight,
  };
  Reason reason = Reason::kCenterImprovable;
  // The claimed radius does not cover every point at the given center.
  bool infeasible = false;
  double attained_radius = 0.0;
  // Unit improving translation of the center (empty for kRadiusNotTight).
  Eigen::VectorXd direction;
};

using CertificateResult = std::variant<Certificate, NotOptimal>;

// Throws Error(kInvalidArgument) when every point coincides with the center:
// optimality conditions need at least two distinct points.
CertificateResult make_certificate(const PointSet& points, const Container& c,
                                   const Solution& sol, const Tolerance& tol = {});

// Checks every certificate invariant against the inputs.
bool verify_certificate(const PointSet& points, const Container& c,
                        const Certificate& cert, const Tolerance& tol = {});

// Euclidean half-space lemma: 0 in conv{(p_i - c)/rho : p_i touching}.
bool halfspace_lemma_check(const PointSet& points, const Solution& sol,
                           const Tolerance& tol = {});
bool halfspace_lemma_check(const PointSet& points, const Container& c,
                           const Solution& sol, const Tolerance& tol = {});

// R(S, C) for a subset given by indices.
double subset_radius(const PointSet& points, std::span<const int> indices,
                     const Container& c, const Tolerance& tol = {});

}  // namespace contain
