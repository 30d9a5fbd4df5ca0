#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contain/geometry.hpp"

namespace contain {

struct CoreRadiusResult {
  int k = 0;
  double value = 0.0;
  // Affinely independent subset of at most k+1 points with R(witness) = value.
  std::vector<int> witness;
};

struct EnumerationOptions {
  // Hard cap on subset solves per call.
  std::int64_t budget = 2'000'000;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// k-th core radius: max R(S, C) over subsets with |S| <= k+1. Exact
// enumeration over (k+1)-subsets in lexicographic order; stops early once a
// subset reaches R(P, C), which bounds every core radius. Ties resolve to the
// lexicographically smallest subset. For k >= dim returns R(P, C).
CoreRadiusResult core_radius(const PointSet& points, const Container& c, int k,
                             const Tolerance& tol = {},
                             const EnumerationOptions& opts = {});

// s(C) = R(-C, C).
double minkowski_asymmetry(const Container& c, const Tolerance& tol = {});

// R(P cap aff(witness), C) for the core-radius witness.
double intersection_radius_check(const PointSet& points, const Container& c, int k,
                                 const Tolerance& tol = {},
                                 const std::optional<CoreRadiusResult>& core = std::nullopt);

// R(P, C + F) with F a (d-k)-dimensional subspace orthogonal to the witness
// certificate normals, evaluated as the k-dimensional containment problem of
// the projections onto F's orthogonal complement.
double cylinder_radius_check(const PointSet& points, const Container& c, int k,
                             const Tolerance& tol = {},
                             const std::optional<CoreRadiusResult>& core = std::nullopt);

// Drops points one at a time (in index order) while R(subset, C) stays at
// `target`. The result is inclusion-minimal, hence affinely independent.
std::vector<int> reduce_to_minimal(const PointSet& points, std::vector<int> indices,
                                   const Container& c, double target,
                                   const Tolerance& tol = {});

// Orthonormal basis of span(columns) by Gram-Schmidt with column pivoting;
// residuals at or below drop_tol are discarded.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns, double drop_tol);

// Orthonormal basis of the orthogonal complement of span(columns) in R^d.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& columns, int d,
                                      double drop_tol);

}  // namespace contain
