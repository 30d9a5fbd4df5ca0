#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "contain/tolerance.hpp"

namespace contain {

enum class Relation { kLessEqual, kEqual };
enum class Sense { kMinimize, kMaximize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

// Per-variable bounds; an absent side means unbounded in that direction.
struct VariableBound {
  std::optional<double> lower;
  std::optional<double> upper;

  static VariableBound free() { return {}; }
  static VariableBound nonnegative() { return {0.0, std::nullopt}; }
};

// Dense LP:  optimize objective.x  s.t.  row_i.x (<= | =) rhs_i,  bounds on x.
// Variables default to free.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars, Sense sense = Sense::kMinimize);

  int num_vars() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rhs_.size()); }
  Sense sense() const { return sense_; }

  void set_objective(int var, double coeff) { objective_(var) = coeff; }
  void set_objective(const Eigen::VectorXd& objective);
  void set_bound(int var, VariableBound bound);

  // Returns the index of the new row.
  int add_row(const Eigen::VectorXd& coeffs, Relation rel, double rhs);
  // Sparse convenience form: (index, coefficient) pairs.
  int add_row(const std::vector<std::pair<int, double>>& terms, Relation rel,
              double rhs);

  const Eigen::VectorXd& objective() const { return objective_; }
  const std::vector<Eigen::VectorXd>& rows() const { return rows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<double>& rhs() const { return rhs_; }
  const std::vector<VariableBound>& bounds() const { return bounds_; }

 private:
  Sense sense_;
  Eigen::VectorXd objective_;
  std::vector<Eigen::VectorXd> rows_;
  std::vector<Relation> relations_;
  std::vector<double> rhs_;
  std::vector<VariableBound> bounds_;
};

// Dual multipliers follow the Lagrangian of the stated sense: for a
// minimization objective - sum_i dual_i * row_i is the reduced-cost vector, so
// <= rows carry dual <= 0; for maximization the signs flip (dual >= 0 on <=).
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  double dual_value = 0.0;
  Eigen::VectorXd primal;
  Eigen::VectorXd dual;
  int iterations = 0;
};

// Two-phase dense simplex with Dantzig pricing that falls back to Bland's
// smallest-index rule after a run of degenerate pivots. The final basis is
// refactorized against the original data so primal and dual values carry no
// accumulated tableau error. Throws Error(kNumericalFailure) rather than
// returning a result it cannot stand behind.
LpResult solve_lp(const LinearProgram& lp, const Tolerance& tol = {});

struct HullMembership {
  bool inside = false;
  // Convex coefficients (one per generator) when inside; at most dim+1 are
  // nonzero since they come from a basic solution.
  Eigen::VectorXd coefficients;
  // When outside: y with y.target >= y.g + 1 for every generator g.
  Eigen::VectorXd separator;
};

// Generators are the columns of `generators`.
HullMembership in_convex_hull(const Eigen::MatrixXd& generators,
                              const Eigen::VectorXd& target,
                              const Tolerance& tol = {});

// min sum(mu) s.t. generators * mu = x, mu >= 0. Infinity when x is not in
// the cone spanned by the generators. For the vertex set of a body with the
// origin inside this is exactly the gauge of that body.
double conic_gauge(const Eigen::MatrixXd& generators, const Eigen::VectorXd& x,
                   const Tolerance& tol = {});

}  // namespace contain
