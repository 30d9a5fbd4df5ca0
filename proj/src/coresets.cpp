#include "contain/coresets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "contain/containment.hpp"
#include "contain/lp.hpp"
#include "contain/meb.hpp"

namespace contain {
namespace {

int farthest_from(const PointSet& points, const Container& c,
                  const Eigen::VectorXd& from, const Tolerance& tol) {
  int best = 0;
  double best_gauge = -1.0;
  for (int i = 0; i < points.size(); ++i) {
    const double g = gauge(c, points.point(i) - from, tol);
    if (g > best_gauge) {
      best_gauge = g;
      best = i;
    }
  }
  return best;
}

CoreSet trivial_coreset() {
  CoreSet cs;
  cs.indices = {0};
  cs.center_conform = true;
  return cs;
}

// min t over centers c that are optimal for S (rho_S within slack) subject to
// gauge(p - c) <= t for all p in P.
double best_covering_over_optimal_centers(const PointSet& points, const Container& c,
                                          const std::vector<int>& subset, double rho_s,
                                          const Tolerance& tol) {
  const int d = points.dim();
  const int n = points.size();
  const double cap = rho_s + tol.feas_at(rho_s);
  std::vector<bool> in_subset(static_cast<std::size_t>(n), false);
  for (int i : subset) in_subset[static_cast<std::size_t>(i)] = true;
  const int t_var = d;

  if (c.has_normals()) {
    const Eigen::MatrixXd& a = c.normals();
    LinearProgram lp(d + 1);
    lp.set_objective(t_var, 1.0);
    for (int i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        const double ap = a.col(k).dot(points.point(i));
        // a.p - a.c <= t   ->   -a.c - t <= -a.p
        Eigen::VectorXd row(d + 1);
        row << -a.col(k), -1.0;
        lp.add_row(row, Relation::kLessEqual, -ap);
        if (in_subset[static_cast<std::size_t>(i)]) {
          Eigen::VectorXd srow(d + 1);
          srow << -a.col(k), 0.0;
          lp.add_row(srow, Relation::kLessEqual, cap - ap);
        }
      }
    }
    const LpResult res = solve_lp(lp, tol);
    require(res.status == LpStatus::kOptimal, ErrorCode::kNumericalFailure,
            "center search LP failed");
    return res.value;
  }

  const Eigen::MatrixXd& v = c.vertices();
  const int nv = static_cast<int>(v.cols());
  const auto mu = [&](int i, int j) { return d + 1 + i * nv + j; };
  LinearProgram lp(d + 1 + n * nv);
  lp.set_objective(t_var, 1.0);
  for (int var = d + 1; var < lp.num_vars(); ++var) {
    lp.set_bound(var, VariableBound::nonnegative());
  }
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < d; ++s) {
      std::vector<std::pair<int, double>> terms{{s, 1.0}};
      for (int j = 0; j < nv; ++j) terms.emplace_back(mu(i, j), v(s, j));
      lp.add_row(terms, Relation::kEqual, points.coords()(s, i));
    }
    std::vector<std::pair<int, double>> sum_terms;
    for (int j = 0; j < nv; ++j) sum_terms.emplace_back(mu(i, j), 1.0);
    auto with_t = sum_terms;
    with_t.emplace_back(t_var, -1.0);
    lp.add_row(with_t, Relation::kLessEqual, 0.0);
    if (in_subset[static_cast<std::size_t>(i)]) {
      lp.add_row(sum_terms, Relation::kLessEqual, cap);
    }
  }
  const LpResult res = solve_lp(lp, tol);
  require(res.status == LpStatus::kOptimal, ErrorCode::kNumericalFailure,
          "center search LP failed");
  return res.value;
}

}  // namespace

double center_conformity_factor(double eps) {
  return 1.0 + eps + std::sqrt(2.0 * eps + eps * eps);
}

CoreSet extract_zero_coreset(const PointSet& points, const Container& c,
                             const Tolerance& tol) {
  const Solution sol = min_containment(points, c, tol);
  if (sol.rho <= tol.feas) {
    CoreSet cs = trivial_coreset();
    cs.center = points.point(0);
    return cs;
  }
  const int d = points.dim();
  const double floor = sol.rho - tol.eq_at(sol.rho);
  std::vector<int> s = sol.active_points;
  if (s.empty() || subset_radius(points, s, c, tol) < floor) {
    // Degenerate duals: fall back to every point touching the optimal homothet.
    s.clear();
    for (int i = 0; i < points.size(); ++i) {
      if (gauge(c, points.point(i) - sol.center, tol) >= sol.rho - tol.feas_at(sol.rho)) {
        s.push_back(i);
      }
    }
  }
  if (static_cast<int>(s.size()) > d + 1 || subset_radius(points, s, c, tol) < floor) {
    std::vector<int> seed = s;
    if (subset_radius(points, seed, c, tol) < floor) {
      seed.resize(static_cast<std::size_t>(points.size()));
      std::iota(seed.begin(), seed.end(), 0);
    }
    s = reduce_to_minimal(points, seed, c, sol.rho, tol);
  }
  CoreSet cs;
  cs.indices = s;
  std::sort(cs.indices.begin(), cs.indices.end());
  cs.radius = subset_radius(points, cs.indices, c, tol);
  cs.center = sol.center;
  cs.eps_achieved = 0.0;
  cs.center_conform = true;
  return cs;
}

CoreSet greedy_coreset(const PointSet& points, const Container& c, double eps,
                       const Tolerance& tol) {
  require(eps > 0.0, ErrorCode::kInvalidArgument, "greedy core-set needs eps > 0");
  require(points.dim() == c.dim(), ErrorCode::kDimensionMismatch,
          "point set and container differ in dimension");
  const int first = farthest_from(points, c, points.point(0), tol);
  const int second = farthest_from(points, c, points.point(first), tol);
  if (first == second) {
    CoreSet cs = trivial_coreset();
    cs.center = points.point(0);
    return cs;
  }
  std::vector<int> s{second, first};
  const int cap = points.dim() + 2;
  for (int added = 0;; ++added) {
    const Solution sol = min_containment(points.subset(s), c, tol);
    int worst = -1;
    double worst_gauge = -1.0;
    for (int i = 0; i < points.size(); ++i) {
      const double g = gauge(c, points.point(i) - sol.center, tol);
      if (g > worst_gauge) {
        worst_gauge = g;
        worst = i;
      }
    }
    if (sol.rho > 0.0 &&
        worst_gauge <= (1.0 + eps) * sol.rho + tol.feas_at(sol.rho)) {
      CoreSet cs;
      cs.indices = s;
      std::sort(cs.indices.begin(), cs.indices.end());
      cs.radius = sol.rho;
      cs.center = sol.center;
      cs.eps_achieved = std::max(0.0, worst_gauge / sol.rho - 1.0);
      cs.center_conform = true;
      return cs;
    }
    if (added >= cap || std::find(s.begin(), s.end(), worst) != s.end()) {
      return extract_zero_coreset(points, c, tol);
    }
    s.push_back(worst);
  }
}

int optimal_coreset_size(const PointSet& points, const Container& c, double eps,
                         const Tolerance& tol, const EnumerationOptions& opts) {
  require(eps >= 0.0, ErrorCode::kInvalidArgument, "eps must be nonnegative");
  const int n = points.size();
  const double full = min_containment(points, c, tol).rho;
  if (n == 1 || full <= tol.feas) return 1;
  const int d = points.dim();
  for (int k = 1; k <= d; ++k) {
    const double rk = core_radius(points, c, k, tol, opts).value;
    if (full <= (1.0 + eps) * rk + tol.eq_at(full)) return std::min(k + 1, n);
  }
  return std::min(d + 1, n);
}

bool validate_coreset(const PointSet& points, const Container& c,
                      const std::vector<int>& subset, double eps,
                      bool require_center_conform, const Tolerance& tol,
                      CenterMode mode) {
  require(!subset.empty(), ErrorCode::kInvalidArgument, "core-set is empty");
  require(eps >= 0.0, ErrorCode::kInvalidArgument, "eps must be nonnegative");
  const Solution sub = min_containment(points.subset(subset), c, tol);
  const double full = min_containment(points, c, tol).rho;
  const bool plain = full <= (1.0 + eps) * sub.rho + tol.eq_at(full);
  if (!require_center_conform || !plain) return plain;

  const double target = (1.0 + eps) * sub.rho;
  double covering = 0.0;
  if (mode == CenterMode::kFixed || c.is_ball()) {
    covering = covering_radius(points, c, sub.center, tol);
  } else {
    covering = best_covering_over_optimal_centers(points, c, subset, sub.rho, tol);
  }
  return covering <= target + tol.feas_at(target);
}

bool center_conformity_bound_check(const PointSet& points,
                                   const std::vector<int>& subset, double eps,
                                   const Tolerance& tol) {
  require(!subset.empty(), ErrorCode::kInvalidArgument, "core-set is empty");
  const EnclosingBall ball = exact_meb(points.subset(subset));
  const double limit = center_conformity_factor(eps) * ball.radius;
  const double reach = (points.coords().colwise() - ball.center).colwise().norm().maxCoeff();
  return reach <= limit + tol.feas_at(limit);
}

bool center_conformity_bound_check(const PointSet& points, const Container& c,
                                   const std::vector<int>& subset, double eps,
                                   const Tolerance& tol) {
  require(c.is_ball(), ErrorCode::kInvalidArgument,
          "center-conformity bound holds for the Euclidean ball only");
  return center_conformity_bound_check(points, subset, eps, tol);
}

}  // namespace contain
