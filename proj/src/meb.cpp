#include "contain/meb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>

namespace contain {
namespace {

class MoveToFront {
 public:
  explicit MoveToFront(const PointSet& points)
      : points_(points), dim_(points.dim()) {
    for (int i = 0; i < points.size(); ++i) order_.push_back(i);
    center_ = Eigen::VectorXd::Zero(dim_);
    scale2_ = 1.0;
    for (int i = 0; i < points.size(); ++i) {
      scale2_ = std::max(scale2_, points.point(i).squaredNorm());
    }
  }

  void run() {
    for (int attempt = 0; attempt < 8; ++attempt) {
      support_.clear();
      squared_radius_ = -1.0;
      recurse(order_.end());
      const Iter worst = farthest();
      if (excess(*worst) <= 1e-10 * scale2_) return;
      // Rounding left a point outside; retry with it at the front.
      order_.splice(order_.begin(), order_, worst);
    }
  }

  EnclosingBall result() const {
    EnclosingBall ball;
    ball.center = center_;
    ball.radius = std::sqrt(std::max(0.0, squared_radius_));
    ball.support = best_support_;
    std::sort(ball.support.begin(), ball.support.end());
    return ball;
  }

 private:
  using Iter = std::list<int>::iterator;

  double excess(int i) const {
    return (points_.point(i) - center_).squaredNorm() - squared_radius_;
  }

  Iter farthest() {
    Iter best = order_.begin();
    double best_excess = -std::numeric_limits<double>::infinity();
    for (auto it = order_.begin(); it != order_.end(); ++it) {
      const double e = excess(*it);
      if (e > best_excess) {
        best_excess = e;
        best = it;
      }
    }
    return best;
  }

  // Circumball of the support set inside its affine hull. Returns false for
  // affinely dependent supports.
  bool update_ball() {
    const int m = static_cast<int>(support_.size());
    if (m == 0) {
      squared_radius_ = -1.0;
      return true;
    }
    const Eigen::VectorXd origin = points_.point(support_.front());
    if (m == 1) {
      center_ = origin;
      squared_radius_ = 0.0;
      best_support_ = support_;
      return true;
    }
    Eigen::MatrixXd v(dim_, m - 1);
    for (int j = 1; j < m; ++j) v.col(j - 1) = points_.point(support_[j]) - origin;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
    qr.setThreshold(1e-12);
    if (qr.rank() < m - 1) return false;
    const Eigen::MatrixXd gram = 2.0 * v.transpose() * v;
    const Eigen::VectorXd rhs = v.colwise().squaredNorm().transpose();
    const Eigen::VectorXd alpha = gram.ldlt().solve(rhs);
    if (!alpha.allFinite()) return false;
    center_ = origin + v * alpha;
    squared_radius_ = (v * alpha).squaredNorm();
    best_support_ = support_;
    return true;
  }

  void recurse(Iter end) {
    update_ball();
    if (static_cast<int>(support_.size()) == dim_ + 1) return;
    for (Iter k = order_.begin(); k != end;) {
      Iter j = k++;
      if (excess(*j) <= 1e-13 * scale2_) continue;
      support_.push_back(*j);
      const Eigen::VectorXd saved_center = center_;
      const double saved_r2 = squared_radius_;
      const std::vector<int> saved_best = best_support_;
      if (update_ball()) {
        recurse(j);
        support_.pop_back();
        order_.splice(order_.begin(), order_, j);
      } else {
        support_.pop_back();
        center_ = saved_center;
        squared_radius_ = saved_r2;
        best_support_ = saved_best;
      }
    }
  }

  const PointSet& points_;
  int dim_;
  std::list<int> order_;
  std::vector<int> support_;
  std::vector<int> best_support_;
  Eigen::VectorXd center_;
  double squared_radius_ = -1.0;
  double scale2_ = 1.0;
};

}  // namespace

EnclosingBall exact_meb(const PointSet& points) {
  MoveToFront solver(points);
  solver.run();
  return solver.result();
}

}  // namespace contain
