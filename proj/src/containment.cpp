#include "contain/containment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "contain/lp.hpp"
#include "contain/meb.hpp"

namespace contain {
namespace {

constexpr double kWeightFloor = 1e-12;

std::vector<int> positive_indices(const Eigen::VectorXd& w) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > kWeightFloor) out.push_back(static_cast<int>(i));
  }
  return out;
}

Solution degenerate_solution(const PointSet& points) {
  Solution sol;
  sol.center = points.point(0);
  sol.duals = Eigen::VectorXd::Zero(points.size());
  sol.duals(0) = 1.0;
  sol.active_points = {0};
  return sol;
}

// Lagrangian dual of  min rho  s.t.  a_k.(p_i - c) <= rho:
//   max sum lambda_ik a_k.p_i  s.t.  sum lambda_ik a_k = 0, sum lambda = 1.
// Its row multipliers are the center and the radius.
Solution solve_hrep(const PointSet& points, const Eigen::MatrixXd& normals,
                    const Tolerance& tol) {
  const int d = points.dim();
  const int n = points.size();
  const int m = static_cast<int>(normals.cols());
  const Eigen::MatrixXd values = normals.transpose() * points.coords();  // m x n

  LinearProgram lp(n * m, Sense::kMaximize);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) {
      const int var = i * m + k;
      lp.set_bound(var, VariableBound::nonnegative());
      lp.set_objective(var, values(k, i));
    }
  }
  for (int t = 0; t < d; ++t) {
    Eigen::VectorXd row(n * m);
    for (int i = 0; i < n; ++i) row.segment(i * m, m) = normals.row(t).transpose();
    lp.add_row(row, Relation::kEqual, 0.0);
  }
  lp.add_row(Eigen::VectorXd::Ones(n * m), Relation::kEqual, 1.0);

  const LpResult res = solve_lp(lp, tol);
  require(res.status == LpStatus::kOptimal, ErrorCode::kNumericalFailure,
          std::string("H-representation containment LP ended ") +
              to_string(res.status));

  Solution sol;
  sol.center = res.dual.head(d);
  const Eigen::MatrixXd shifted = points.coords().colwise() - sol.center;
  sol.rho = std::max(0.0, (normals.transpose() * shifted).maxCoeff());
  require(std::abs(sol.rho - res.value) <= tol.eq_at(sol.rho),
          ErrorCode::kNumericalFailure,
          "containment LP center does not attain the optimal radius");

  sol.duals = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd normal_weight = Eigen::VectorXd::Zero(m);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) {
      const double w = std::max(0.0, res.primal(i * m + k));
      sol.duals(i) += w;
      normal_weight(k) += w;
    }
  }
  sol.active_points = positive_indices(sol.duals);
  sol.active_normals = positive_indices(normal_weight);
  return sol;
}

// min rho  s.t.  p_i - c = sum_j mu_ij v_j,  sum_j mu_ij = rho,  mu >= 0.
Solution solve_vrep(const PointSet& points, const Eigen::MatrixXd& vertices,
                    const Tolerance& tol) {
  const int d = points.dim();
  const int n = points.size();
  const int nv = static_cast<int>(vertices.cols());
  const int rho_var = d;
  const auto mu = [&](int i, int j) { return d + 1 + i * nv + j; };

  LinearProgram lp(d + 1 + n * nv);
  lp.set_objective(rho_var, 1.0);
  lp.set_bound(rho_var, VariableBound::nonnegative());
  for (int v = d + 1; v < lp.num_vars(); ++v) {
    lp.set_bound(v, VariableBound::nonnegative());
  }
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < d; ++t) {
      std::vector<std::pair<int, double>> terms{{t, 1.0}};
      for (int j = 0; j < nv; ++j) terms.emplace_back(mu(i, j), vertices(t, j));
      lp.add_row(terms, Relation::kEqual, points.coords()(t, i));
    }
  }
  const int first_sum_row = n * d;
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> terms{{rho_var, -1.0}};
    for (int j = 0; j < nv; ++j) terms.emplace_back(mu(i, j), 1.0);
    lp.add_row(terms, Relation::kEqual, 0.0);
  }

  const LpResult res = solve_lp(lp, tol);
  require(res.status == LpStatus::kOptimal, ErrorCode::kNumericalFailure,
          std::string("V-representation containment LP ended ") +
              to_string(res.status));

  Solution sol;
  sol.center = res.primal.head(d);
  sol.rho = std::max(0.0, res.primal(rho_var));
  sol.duals.resize(n);
  for (int i = 0; i < n; ++i) {
    sol.duals(i) = std::max(0.0, -res.dual(first_sum_row + i));
  }
  const double total = sol.duals.sum();
  if (total > 0.0) sol.duals /= total;
  sol.active_points = positive_indices(sol.duals);
  return sol;
}

Solution solve_ball(const PointSet& points, const Tolerance& tol) {
  const EnclosingBall ball = exact_meb(points);
  Solution sol;
  sol.center = ball.center;
  sol.rho = ball.radius;
  sol.duals = Eigen::VectorXd::Zero(points.size());
  Eigen::MatrixXd normals(points.dim(), static_cast<Eigen::Index>(ball.support.size()));
  for (std::size_t j = 0; j < ball.support.size(); ++j) {
    normals.col(static_cast<Eigen::Index>(j)) =
        (points.point(ball.support[j]) - ball.center) / ball.radius;
  }
  const HullMembership hull = in_convex_hull(normals, Eigen::VectorXd::Zero(points.dim()), tol);
  require(hull.inside, ErrorCode::kNumericalFailure,
          "enclosing ball center is outside the hull of its support");
  for (std::size_t j = 0; j < ball.support.size(); ++j) {
    sol.duals(ball.support[j]) = hull.coefficients(static_cast<Eigen::Index>(j));
  }
  sol.active_points = positive_indices(sol.duals);
  return sol;
}

bool all_coincide(const PointSet& points) {
  const Eigen::MatrixXd diff = points.coords().colwise() - points.coords().col(0);
  return diff.isZero(0.0);
}

// Normal per touching point plus convex weights summing the normals to zero.
struct NormalSystem {
  std::vector<int> points;
  std::vector<Eigen::VectorXd> normals;
  Eigen::VectorXd lambda;
};

std::vector<int> touching(const PointSet& points, const Container& c,
                          const Point& center, double rho, const Tolerance& tol) {
  std::vector<int> out;
  const double band = tol.feas_at(rho);
  for (int i = 0; i < points.size(); ++i) {
    if (gauge(c, points.point(i) - center, tol) >= rho - band) out.push_back(i);
  }
  return out;
}

// Keeps only the points of a basic solution of 0 in conv(normals).
NormalSystem prune(NormalSystem sys, const Tolerance& tol) {
  const int d = static_cast<int>(sys.normals.front().size());
  Eigen::MatrixXd g(d, static_cast<Eigen::Index>(sys.normals.size()));
  for (std::size_t j = 0; j < sys.normals.size(); ++j) {
    g.col(static_cast<Eigen::Index>(j)) = sys.normals[j];
  }
  const HullMembership hull = in_convex_hull(g, Eigen::VectorXd::Zero(d), tol);
  if (!hull.inside) return sys;
  NormalSystem out;
  std::vector<double> weights;
  for (std::size_t j = 0; j < sys.normals.size(); ++j) {
    const double w = hull.coefficients(static_cast<Eigen::Index>(j));
    if (w <= kWeightFloor) continue;
    out.points.push_back(sys.points[j]);
    out.normals.push_back(sys.normals[j]);
    weights.push_back(w);
  }
  out.lambda = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  out.lambda /= out.lambda.sum();
  return out;
}

struct NormalSearch {
  bool found = false;
  NormalSystem system;
  Eigen::VectorXd improving;  // set when !found and cheaply available
};

NormalSearch ball_normals(const PointSet& points, const std::vector<int>& touch,
                          const Point& center, const Tolerance& tol) {
  const int d = points.dim();
  Eigen::MatrixXd g(d, static_cast<Eigen::Index>(touch.size()));
  for (std::size_t j = 0; j < touch.size(); ++j) {
    g.col(static_cast<Eigen::Index>(j)) = (points.point(touch[j]) - center).normalized();
  }
  NormalSearch out;
  const HullMembership hull = in_convex_hull(g, Eigen::VectorXd::Zero(d), tol);
  if (!hull.inside) {
    out.improving = -hull.separator;
    return out;
  }
  out.found = true;
  for (std::size_t j = 0; j < touch.size(); ++j) {
    out.system.points.push_back(touch[j]);
    out.system.normals.push_back(g.col(static_cast<Eigen::Index>(j)));
  }
  out.system.lambda = hull.coefficients;
  return out;
}

NormalSearch hrep_normals(const PointSet& points, const Eigen::MatrixXd& normals,
                          const std::vector<int>& touch, const Point& center,
                          double rho, const Tolerance& tol) {
  const int d = points.dim();
  std::vector<std::pair<int, int>> pairs;  // (point, normal)
  const double band = tol.feas_at(rho);
  for (int i : touch) {
    const Eigen::VectorXd vals = normals.transpose() * (points.point(i) - center);
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
      if (vals(k) >= rho - band) pairs.emplace_back(i, static_cast<int>(k));
    }
  }
  NormalSearch out;
  Eigen::MatrixXd g(d, static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    g.col(static_cast<Eigen::Index>(j)) = normals.col(pairs[j].second);
  }
  const HullMembership hull = in_convex_hull(g, Eigen::VectorXd::Zero(d), tol);
  if (!hull.inside) {
    out.improving = -hull.separator;
    return out;
  }
  // Aggregate facet normals per touching point: a convex combination of
  // normals active at the same boundary point is again a supporting normal.
  out.found = true;
  std::vector<double> weights;
  for (int i : touch) {
    double w = 0.0;
    Eigen::VectorXd a = Eigen::VectorXd::Zero(d);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[j].first != i) continue;
      const double lj = hull.coefficients(static_cast<Eigen::Index>(j));
      w += lj;
      a += lj * g.col(static_cast<Eigen::Index>(j));
    }
    if (w <= kWeightFloor) continue;
    out.system.points.push_back(i);
    out.system.normals.push_back(a / w);
    weights.push_back(w);
  }
  out.system.lambda = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  return out;
}

// Feasibility LP over u_i = lambda_i a_i:
//   u_i.v_j <= lambda_i,  u_i.x_i = lambda_i,  sum u_i = 0,  sum lambda_i = 1.
NormalSearch vrep_normals(const PointSet& points, const Eigen::MatrixXd& vertices,
                          const std::vector<int>& touch, const Point& center,
                          double rho, const Tolerance& tol) {
  const int d = points.dim();
  const int t = static_cast<int>(touch.size());
  const int nv = static_cast<int>(vertices.cols());
  const auto u = [&](int i, int s) { return i * (d + 1) + s; };
  const auto lam = [&](int i) { return i * (d + 1) + d; };
  LinearProgram lp(t * (d + 1));
  for (int i = 0; i < t; ++i) lp.set_bound(lam(i), VariableBound::nonnegative());
  for (int i = 0; i < t; ++i) {
    const Eigen::VectorXd x = (points.point(touch[static_cast<std::size_t>(i)]) - center) / rho;
    for (int j = 0; j < nv; ++j) {
      std::vector<std::pair<int, double>> terms{{lam(i), -1.0}};
      for (int s = 0; s < d; ++s) terms.emplace_back(u(i, s), vertices(s, j));
      lp.add_row(terms, Relation::kLessEqual, 0.0);
    }
    std::vector<std::pair<int, double>> terms{{lam(i), -1.0}};
    for (int s = 0; s < d; ++s) terms.emplace_back(u(i, s), x(s));
    lp.add_row(terms, Relation::kEqual, 0.0);
  }
  for (int s = 0; s < d; ++s) {
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i < t; ++i) terms.emplace_back(u(i, s), 1.0);
    lp.add_row(terms, Relation::kEqual, 0.0);
  }
  {
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i < t; ++i) terms.emplace_back(lam(i), 1.0);
    lp.add_row(terms, Relation::kEqual, 1.0);
  }
  NormalSearch out;
  const LpResult res = solve_lp(lp, tol);
  if (res.status != LpStatus::kOptimal) return out;
  out.found = true;
  std::vector<double> weights;
  for (int i = 0; i < t; ++i) {
    const double w = res.primal(lam(i));
    if (w <= kWeightFloor) continue;
    Eigen::VectorXd a(d);
    for (int s = 0; s < d; ++s) a(s) = res.primal(u(i, s)) / w;
    out.system.points.push_back(touch[static_cast<std::size_t>(i)]);
    out.system.normals.push_back(a);
    weights.push_back(w);
  }
  out.system.lambda = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  out.system.lambda /= out.system.lambda.sum();
  return out;
}

}  // namespace

Solution min_containment(const PointSet& points, const Container& c,
                         const Tolerance& tol, Formulation formulation) {
  tol.validate();
  require(points.dim() == c.dim(), ErrorCode::kDimensionMismatch,
          "point set and container differ in dimension");
  if (points.size() == 1 || all_coincide(points)) return degenerate_solution(points);
  if (c.is_ball()) return solve_ball(points, tol);

  bool use_h = c.has_normals();
  if (formulation == Formulation::kHRep) {
    require(c.has_normals(), ErrorCode::kMissingRepresentation,
            "H-representation LP requested for a container without normals");
    use_h = true;
  } else if (formulation == Formulation::kVRep) {
    require(c.has_vertices(), ErrorCode::kMissingRepresentation,
            "V-representation LP requested for a container without vertices");
    use_h = false;
  }
  return use_h ? solve_hrep(points, c.normals(), tol)
               : solve_vrep(points, c.vertices(), tol);
}

double subset_radius(const PointSet& points, std::span<const int> indices,
                     const Container& c, const Tolerance& tol) {
  return min_containment(points.subset(indices), c, tol).rho;
}

CertificateResult make_certificate(const PointSet& points, const Container& c,
                                   const Solution& sol, const Tolerance& tol) {
  require(points.dim() == c.dim() && sol.center.size() == c.dim(),
          ErrorCode::kDimensionMismatch, "certificate inputs differ in dimension");
  const double attained = covering_radius(points, c, sol.center, tol);
  if (attained <= tol.feas) {
    require(sol.rho > tol.feas, ErrorCode::kInvalidArgument,
            "optimality certificate undefined when all points coincide with the center");
    NotOptimal no;
    no.reason = NotOptimal::Reason::kRadiusNotTight;
    no.attained_radius = attained;
    return no;
  }

  const std::vector<int> touch = touching(points, c, sol.center, attained, tol);
  NormalSearch search;
  if (c.is_ball()) {
    search = ball_normals(points, touch, sol.center, tol);
  } else if (c.has_normals()) {
    search = hrep_normals(points, c.normals(), touch, sol.center, attained, tol);
  } else {
    search = vrep_normals(points, c.vertices(), touch, sol.center, attained, tol);
  }

  const bool infeasible = attained > sol.rho + tol.feas_at(sol.rho);
  if (!search.found) {
    NotOptimal no;
    no.infeasible = infeasible;
    no.attained_radius = attained;
    Eigen::VectorXd dir = search.improving;
    if (dir.size() == 0) {
      // The touching subset alone can be covered more tightly; its center is
      // a strict descent target by convexity of the gauge.
      const Solution sub = min_containment(points.subset(touch), c, tol);
      dir = sub.center - sol.center;
    }
    require(dir.norm() > 0.0, ErrorCode::kNumericalFailure,
            "no improving direction found for a non-optimal center");
    no.direction = dir.normalized();
    return no;
  }

  if (sol.rho > attained + tol.eq_at(attained)) {
    NotOptimal no;
    no.reason = NotOptimal::Reason::kRadiusNotTight;
    no.attained_radius = attained;
    return no;
  }

  const NormalSystem sys = prune(std::move(search.system), tol);
  Certificate cert;
  cert.center = sol.center;
  cert.rho = attained;
  cert.touch_indices = sys.points;
  for (int i : sys.points) cert.touch_points.push_back(points.point(i));
  cert.normals = sys.normals;
  cert.lambda = sys.lambda;
  return cert;
}

bool verify_certificate(const PointSet& points, const Container& c,
                        const Certificate& cert, const Tolerance& tol) {
  const int d = c.dim();
  const std::size_t k = cert.touch_points.size();
  if (k < 2 || k > static_cast<std::size_t>(d) + 1) return false;
  if (cert.normals.size() != k || static_cast<std::size_t>(cert.lambda.size()) != k) {
    return false;
  }
  if (!(cert.rho > 0.0)) return false;
  const double scale = std::max(1.0, cert.rho);
  if (covering_radius(points, c, cert.center, tol) > cert.rho + tol.feas * scale) {
    return false;
  }
  if ((cert.lambda.array() < -tol.feas).any()) return false;
  if (std::abs(cert.lambda.sum() - 1.0) > tol.feas) return false;

  Eigen::VectorXd combo = Eigen::VectorXd::Zero(d);
  double normal_scale = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::VectorXd x = (cert.touch_points[i] - cert.center) / cert.rho;
    const Eigen::VectorXd& a = cert.normals[i];
    if (std::abs(gauge(c, x, tol) - 1.0) > 10 * tol.feas * scale) return false;
    if (std::abs(a.dot(x) - 1.0) > 10 * tol.feas * scale) return false;
    // a must support C: h_C(a) <= 1.
    double h = 0.0;
    if (c.is_ball()) {
      h = a.norm();
    } else if (c.has_vertices()) {
      h = support(c, a);
    } else {
      LinearProgram lp(d, Sense::kMaximize);
      lp.set_objective(a);
      for (Eigen::Index j = 0; j < c.normals().cols(); ++j) {
        lp.add_row(Eigen::VectorXd(c.normals().col(j)), Relation::kLessEqual, 1.0);
      }
      const LpResult res = solve_lp(lp, tol);
      if (res.status != LpStatus::kOptimal) return false;
      h = res.value;
    }
    if (h > 1.0 + 10 * tol.feas * scale) return false;
    combo += cert.lambda(static_cast<Eigen::Index>(i)) * a;
    normal_scale = std::max(normal_scale, a.cwiseAbs().maxCoeff());
  }
  return combo.cwiseAbs().maxCoeff() <= 10 * tol.feas * normal_scale;
}

bool halfspace_lemma_check(const PointSet& points, const Solution& sol,
                           const Tolerance& tol) {
  require(points.dim() == sol.center.size(), ErrorCode::kDimensionMismatch,
          "solution center dimension differs from points");
  if (!(sol.rho > 0.0)) return false;
  const double band = tol.feas_at(sol.rho);
  std::vector<Eigen::VectorXd> dirs;
  for (int i = 0; i < points.size(); ++i) {
    const double dist = (points.point(i) - sol.center).norm();
    if (std::abs(dist - sol.rho) <= band) {
      dirs.push_back((points.point(i) - sol.center) / sol.rho);
    }
  }
  if (dirs.empty()) return false;
  Eigen::MatrixXd g(points.dim(), static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t j = 0; j < dirs.size(); ++j) g.col(static_cast<Eigen::Index>(j)) = dirs[j];
  return in_convex_hull(g, Eigen::VectorXd::Zero(points.dim()), tol).inside;
}

bool halfspace_lemma_check(const PointSet& points, const Container& c,
                           const Solution& sol, const Tolerance& tol) {
  require(c.is_ball(), ErrorCode::kInvalidArgument,
          "half-space lemma applies to the Euclidean ball only");
  require(points.dim() == c.dim(), ErrorCode::kDimensionMismatch,
          "point set and container differ in dimension");
  return halfspace_lemma_check(points, sol, tol);
}

}  // namespace contain
