#include "contain/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace contain {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "OPTIMAL";
    case LpStatus::kInfeasible: return "INFEASIBLE";
    case LpStatus::kUnbounded: return "UNBOUNDED";
  }
  return "?";
}

LinearProgram::LinearProgram(int num_vars, Sense sense)
    : sense_(sense),
      objective_(Eigen::VectorXd::Zero(num_vars)),
      bounds_(static_cast<std::size_t>(num_vars)) {
  require(num_vars >= 0, ErrorCode::kInvalidArgument, "negative variable count");
}

void LinearProgram::set_objective(const Eigen::VectorXd& objective) {
  require(objective.size() == objective_.size(), ErrorCode::kDimensionMismatch,
          "objective length does not match variable count");
  objective_ = objective;
}

void LinearProgram::set_bound(int var, VariableBound bound) {
  require(var >= 0 && var < num_vars(), ErrorCode::kInvalidArgument,
          "bound on unknown variable");
  bounds_[static_cast<std::size_t>(var)] = bound;
}

int LinearProgram::add_row(const Eigen::VectorXd& coeffs, Relation rel,
                           double rhs) {
  require(coeffs.size() == objective_.size(), ErrorCode::kDimensionMismatch,
          "constraint row length does not match variable count");
  rows_.push_back(coeffs);
  relations_.push_back(rel);
  rhs_.push_back(rhs);
  return num_rows() - 1;
}

int LinearProgram::add_row(const std::vector<std::pair<int, double>>& terms,
                           Relation rel, double rhs) {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(num_vars());
  for (const auto& [idx, coeff] : terms) {
    require(idx >= 0 && idx < num_vars(), ErrorCode::kInvalidArgument,
            "constraint term on unknown variable");
    row(idx) += coeff;
  }
  return add_row(row, rel, rhs);
}

namespace {

// x_orig = offset + sum over (col, sign) of sign * x_std[col], x_std >= 0.
struct VariableMap {
  double offset = 0.0;
  int col = -1;
  double sign = 1.0;
  int neg_col = -1;  // second column for free variables
};

class Simplex {
 public:
  Simplex(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c,
          const Tolerance& tol)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), tol_(tol) {
    m_ = static_cast<int>(a_.rows());
    n_real_ = static_cast<int>(a_.cols());
    n_ = n_real_ + m_;
    cost_tol_ = tol_.pivot * (1.0 + (c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0));
    feas_tol_ = tol_.feas * (1.0 + (b_.size() ? b_.cwiseAbs().maxCoeff() : 0.0));
  }

  LpStatus run() {
    build();
    if (!iterate(true)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "phase one reported unbounded, which is impossible");
    }
    double infeasibility = 0.0;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] >= n_real_) infeasibility += rhs_[r];
    }
    if (infeasibility > feas_tol_) return LpStatus::kInfeasible;
    drive_out_artificials();
    if (!iterate(false)) return LpStatus::kUnbounded;
    return LpStatus::kOptimal;
  }

  const std::vector<int>& basis() const { return basis_; }
  int iterations() const { return iterations_; }
  int num_real() const { return n_real_; }

 private:
  double& at(int r, int j) { return t_[static_cast<std::size_t>(r) * n_ + j]; }
  double at(int r, int j) const {
    return t_[static_cast<std::size_t>(r) * n_ + j];
  }

  void build() {
    t_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
    rhs_.assign(m_, 0.0);
    basis_.assign(m_, 0);
    is_basic_.assign(n_, false);
    d1_.assign(n_, 0.0);
    d2_.assign(n_, 0.0);
    for (int r = 0; r < m_; ++r) {
      for (int j = 0; j < n_real_; ++j) at(r, j) = a_(r, j);
      at(r, n_real_ + r) = 1.0;
      rhs_[r] = b_(r);
      basis_[r] = n_real_ + r;
      is_basic_[n_real_ + r] = true;
    }
    for (int j = 0; j < n_real_; ++j) {
      double col_sum = 0.0;
      for (int r = 0; r < m_; ++r) col_sum += at(r, j);
      d1_[j] = -col_sum;
      d2_[j] = c_(j);
    }
  }

  void pivot(int r, int e) {
    const double piv = at(r, e);
    double* prow = &t_[static_cast<std::size_t>(r) * n_];
    for (int j = 0; j < n_; ++j) prow[j] /= piv;
    rhs_[r] /= piv;
    prow[e] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[static_cast<std::size_t>(i) * n_];
      const double f = row[e];
      if (f == 0.0) continue;
      for (int j = 0; j < n_; ++j) row[j] -= f * prow[j];
      row[e] = 0.0;
      rhs_[i] -= f * rhs_[r];
    }
    for (auto* d : {&d1_, &d2_}) {
      const double f = (*d)[e];
      if (f == 0.0) continue;
      for (int j = 0; j < n_; ++j) (*d)[j] -= f * prow[j];
      (*d)[e] = 0.0;
    }
    is_basic_[basis_[r]] = false;
    basis_[r] = e;
    is_basic_[e] = true;
    ++iterations_;
  }

  // Returns false when the objective is unbounded below.
  bool iterate(bool phase_one) {
    std::vector<double>& d = phase_one ? d1_ : d2_;
    const int limit = 50 * (m_ + n_) + 1000;
    const int stall_limit = 2 * (m_ + 10);
    bool bland = false;
    int stalled = 0;
    for (int it = 0;; ++it) {
      if (it > limit) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration limit exceeded");
      }
      const int allowed = phase_one ? n_ : n_real_;
      int enter = -1;
      double best = -cost_tol_;
      for (int j = 0; j < allowed; ++j) {
        if (is_basic_[j] || d[j] >= -cost_tol_) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (d[j] < best) {
          best = d[j];
          enter = j;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double min_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        const double coeff = at(r, enter);
        if (coeff <= tol_.pivot) continue;
        const double ratio = std::max(rhs_[r], 0.0) / coeff;
        const double slack = 1e-12 * (1.0 + std::abs(min_ratio));
        if (leave < 0 || ratio < min_ratio - slack) {
          leave = r;
          min_ratio = ratio;
        } else if (ratio <= min_ratio + slack) {
          // Ties: Bland needs the smallest basic index; otherwise prefer the
          // larger pivot element.
          const bool better = bland ? basis_[r] < basis_[leave]
                                    : coeff > at(leave, enter);
          if (better) leave = r;
          min_ratio = std::min(min_ratio, ratio);
        }
      }
      if (leave < 0) {
        for (int r = 0; r < m_; ++r) {
          if (at(r, enter) > 1e-3 * tol_.pivot && rhs_[r] > feas_tol_) {
            throw Error(ErrorCode::kNumericalFailure,
                        "entering column has only sub-threshold pivots");
          }
        }
        return false;
      }
      stalled = (min_ratio <= 1e-14) ? stalled + 1 : 0;
      if (stalled > stall_limit) bland = true;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_real_) continue;
      int best = -1;
      double best_abs = tol_.pivot;
      for (int j = 0; j < n_real_; ++j) {
        if (is_basic_[j]) continue;
        const double v = std::abs(at(r, j));
        if (v > best_abs) {
          best_abs = v;
          best = j;
        }
      }
      // No candidate: the row is redundant and its artificial stays at zero.
      if (best >= 0) pivot(r, best);
    }
  }

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::VectorXd c_;
  Tolerance tol_;
  int m_ = 0;
  int n_real_ = 0;
  int n_ = 0;
  double cost_tol_ = 0.0;
  double feas_tol_ = 0.0;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<double> d1_;
  std::vector<double> d2_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  int iterations_ = 0;
};

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const Tolerance& tol) {
  tol.validate();
  const int nv = lp.num_vars();
  require(all_finite(lp.objective()), ErrorCode::kInvalidArgument,
          "non-finite objective");
  for (int i = 0; i < lp.num_rows(); ++i) {
    require(all_finite(lp.rows()[i]) && std::isfinite(lp.rhs()[i]),
            ErrorCode::kInvalidArgument, "non-finite constraint data");
  }

  LpResult result;
  const double sense_sign = lp.sense() == Sense::kMaximize ? -1.0 : 1.0;

  // Variables -> nonnegative standard columns.
  std::vector<VariableMap> vars(static_cast<std::size_t>(nv));
  std::vector<std::pair<int, double>> upper_rows;  // (col, capacity)
  int ns = 0;
  for (int j = 0; j < nv; ++j) {
    const VariableBound& bd = lp.bounds()[static_cast<std::size_t>(j)];
    VariableMap& vm = vars[static_cast<std::size_t>(j)];
    if (bd.lower && bd.upper) {
      if (*bd.lower > *bd.upper + tol.feas) {
        result.status = LpStatus::kInfeasible;
        return result;
      }
      vm.offset = *bd.lower;
      vm.col = ns++;
      upper_rows.emplace_back(vm.col, std::max(0.0, *bd.upper - *bd.lower));
    } else if (bd.lower) {
      vm.offset = *bd.lower;
      vm.col = ns++;
    } else if (bd.upper) {
      vm.offset = *bd.upper;
      vm.col = ns++;
      vm.sign = -1.0;
    } else {
      vm.col = ns++;
      vm.neg_col = ns++;
    }
  }

  const int m_user = lp.num_rows();
  const int m = m_user + static_cast<int>(upper_rows.size());
  int n_slack = static_cast<int>(upper_rows.size());
  for (Relation rel : lp.relations()) {
    if (rel == Relation::kLessEqual) ++n_slack;
  }
  const int n_real = ns + n_slack;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n_real);
  Eigen::VectorXd b(m);
  Eigen::VectorXd row_sign = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_real);
  double constant = 0.0;

  for (int j = 0; j < nv; ++j) {
    const VariableMap& vm = vars[static_cast<std::size_t>(j)];
    const double cj = sense_sign * lp.objective()(j);
    constant += cj * vm.offset;
    c(vm.col) += cj * vm.sign;
    if (vm.neg_col >= 0) c(vm.neg_col) -= cj;
  }

  int slack = ns;
  for (int i = 0; i < m_user; ++i) {
    const Eigen::VectorXd& row = lp.rows()[static_cast<std::size_t>(i)];
    double rhs = lp.rhs()[static_cast<std::size_t>(i)];
    for (int j = 0; j < nv; ++j) {
      const double aij = row(j);
      if (aij == 0.0) continue;
      const VariableMap& vm = vars[static_cast<std::size_t>(j)];
      rhs -= aij * vm.offset;
      a(i, vm.col) += aij * vm.sign;
      if (vm.neg_col >= 0) a(i, vm.neg_col) -= aij;
    }
    if (lp.relations()[static_cast<std::size_t>(i)] == Relation::kLessEqual) {
      a(i, slack++) = 1.0;
    }
    b(i) = rhs;
  }
  for (std::size_t u = 0; u < upper_rows.size(); ++u) {
    const int i = m_user + static_cast<int>(u);
    a(i, upper_rows[u].first) = 1.0;
    a(i, slack++) = 1.0;
    b(i) = upper_rows[u].second;
  }
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0.0) {
      row_sign(i) = -1.0;
      a.row(i) *= -1.0;
      b(i) = -b(i);
    }
  }

  Eigen::VectorXd x_std = Eigen::VectorXd::Zero(n_real);
  Eigen::VectorXd y_std = Eigen::VectorXd::Zero(m);

  if (m == 0) {
    for (int j = 0; j < n_real; ++j) {
      if (c(j) < -tol.pivot) {
        result.status = LpStatus::kUnbounded;
        return result;
      }
    }
  } else {
    Simplex simplex(a, b, c, tol);
    const LpStatus status = simplex.run();
    result.iterations = simplex.iterations();
    if (status != LpStatus::kOptimal) {
      result.status = status;
      return result;
    }
    // Refactorize the final basis against the untouched standard-form data.
    const std::vector<int>& basis = simplex.basis();
    Eigen::MatrixXd basis_matrix(m, m);
    Eigen::VectorXd basis_cost(m);
    for (int r = 0; r < m; ++r) {
      const int col = basis[static_cast<std::size_t>(r)];
      if (col < n_real) {
        basis_matrix.col(r) = a.col(col);
        basis_cost(r) = c(col);
      } else {
        basis_matrix.col(r) = Eigen::VectorXd::Unit(m, col - n_real);
        basis_cost(r) = 0.0;
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!lu.isInvertible()) {
      throw Error(ErrorCode::kNumericalFailure, "final simplex basis is singular");
    }
    const Eigen::VectorXd x_basic = lu.solve(b);
    y_std = lu.transpose().solve(basis_cost);
    const double feas_scale = tol.feas * (1.0 + b.cwiseAbs().maxCoeff());
    for (int r = 0; r < m; ++r) {
      const int col = basis[static_cast<std::size_t>(r)];
      double v = x_basic(r);
      if (v < -feas_scale) {
        throw Error(ErrorCode::kNumericalFailure,
                    "refactorized basis is primal infeasible");
      }
      v = std::max(v, 0.0);
      if (col < n_real) {
        x_std(col) = v;
      } else if (v > feas_scale) {
        throw Error(ErrorCode::kNumericalFailure,
                    "artificial variable left positive after phase one");
      }
    }
  }

  result.status = LpStatus::kOptimal;
  result.primal.resize(nv);
  for (int j = 0; j < nv; ++j) {
    const VariableMap& vm = vars[static_cast<std::size_t>(j)];
    double v = vm.offset + vm.sign * x_std(vm.col);
    if (vm.neg_col >= 0) v -= x_std(vm.neg_col);
    result.primal(j) = v;
  }
  result.value = lp.objective().dot(result.primal);
  result.dual.resize(m_user);
  for (int i = 0; i < m_user; ++i) {
    result.dual(i) = sense_sign * row_sign(i) * y_std(i);
  }
  result.dual_value = sense_sign * (b.dot(y_std) + constant);

  // Residual check in the caller's coordinates.
  for (int i = 0; i < m_user; ++i) {
    const double lhs = lp.rows()[static_cast<std::size_t>(i)].dot(result.primal);
    const double rhs = lp.rhs()[static_cast<std::size_t>(i)];
    const double scale = 1.0 + std::abs(rhs) +
                         lp.rows()[static_cast<std::size_t>(i)].cwiseAbs().dot(
                             result.primal.cwiseAbs());
    const double viol = lp.relations()[static_cast<std::size_t>(i)] == Relation::kEqual
                            ? std::abs(lhs - rhs)
                            : lhs - rhs;
    if (viol > tol.feas * scale) {
      throw Error(ErrorCode::kNumericalFailure,
                  "solution violates constraint " + std::to_string(i) +
                      " by " + std::to_string(viol));
    }
  }
  return result;
}

HullMembership in_convex_hull(const Eigen::MatrixXd& generators,
                              const Eigen::VectorXd& target,
                              const Tolerance& tol) {
  const int d = static_cast<int>(generators.rows());
  const int n = static_cast<int>(generators.cols());
  require(n > 0, ErrorCode::kInvalidArgument, "in_convex_hull needs generators");
  require(target.size() == d, ErrorCode::kDimensionMismatch,
          "target dimension differs from generators");

  HullMembership out;
  {
    LinearProgram lp(n);
    for (int j = 0; j < n; ++j) lp.set_bound(j, VariableBound::nonnegative());
    for (int t = 0; t < d; ++t) {
      lp.add_row(Eigen::VectorXd(generators.row(t).transpose()), Relation::kEqual,
                 target(t));
    }
    lp.add_row(Eigen::VectorXd::Ones(n), Relation::kEqual, 1.0);
    const LpResult res = solve_lp(lp, tol);
    if (res.status == LpStatus::kOptimal) {
      Eigen::VectorXd lambda = res.primal.cwiseMax(0.0);
      lambda /= lambda.sum();
      const double residual = (generators * lambda - target).cwiseAbs().maxCoeff();
      const double scale = 1.0 + generators.cwiseAbs().maxCoeff();
      if (residual <= tol.feas * scale) {
        out.inside = true;
        out.coefficients = std::move(lambda);
        return out;
      }
    }
  }

  // Strict separation: y.(target - g_j) >= 1 for all j, minimizing |y|_1.
  LinearProgram sep(2 * d);
  for (int j = 0; j < 2 * d; ++j) {
    sep.set_bound(j, VariableBound::nonnegative());
    sep.set_objective(j, 1.0);
  }
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXd diff = target - generators.col(j);
    Eigen::VectorXd row(2 * d);
    row << -diff, diff;
    sep.add_row(row, Relation::kLessEqual, -1.0);
  }
  const LpResult res = solve_lp(sep, tol);
  if (res.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure,
                "hull membership LP and separation LP both failed");
  }
  out.inside = false;
  out.separator = res.primal.head(d) - res.primal.tail(d);
  return out;
}

double conic_gauge(const Eigen::MatrixXd& generators, const Eigen::VectorXd& x,
                   const Tolerance& tol) {
  const int d = static_cast<int>(generators.rows());
  const int n = static_cast<int>(generators.cols());
  require(x.size() == d, ErrorCode::kDimensionMismatch,
          "point dimension differs from generators");
  if (x.isZero(0.0)) return 0.0;
  LinearProgram lp(n);
  for (int j = 0; j < n; ++j) {
    lp.set_bound(j, VariableBound::nonnegative());
    lp.set_objective(j, 1.0);
  }
  for (int t = 0; t < d; ++t) {
    lp.add_row(Eigen::VectorXd(generators.row(t).transpose()), Relation::kEqual,
               x(t));
  }
  const LpResult res = solve_lp(lp, tol);
  if (res.status == LpStatus::kInfeasible) {
    return std::numeric_limits<double>::infinity();
  }
  if (res.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure, "conic gauge LP unbounded");
  }
  return std::max(0.0, res.value);
}

}  // namespace contain
