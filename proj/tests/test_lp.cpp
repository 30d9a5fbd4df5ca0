#include <gtest/gtest.h>

#include <random>

#include "contain/instances.hpp"
#include "contain/lp.hpp"
#include "oracles.hpp"

using namespace contain;

TEST(SolveLp, MaxWithUpperRow) {
  LinearProgram lp(1, Sense::kMaximize);
  lp.set_objective(0, 1.0);
  lp.add_row(Eigen::VectorXd::Ones(1), Relation::kLessEqual, 1.0);
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(SolveLp, Unbounded) {
  LinearProgram lp(1, Sense::kMaximize);
  lp.set_objective(0, 1.0);
  lp.set_bound(0, VariableBound::nonnegative());
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);
}

TEST(SolveLp, Infeasible) {
  LinearProgram lp(1);
  lp.add_row(Eigen::VectorXd::Ones(1), Relation::kLessEqual, -1.0);
  lp.set_bound(0, VariableBound::nonnegative());
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLp, OneDimensionalTwoPointContainment) {
  // vars (c, rho): min rho s.t. +-(1 - c) <= rho, +-(-1 - c) <= rho
  LinearProgram lp(2);
  lp.set_objective(1, 1.0);
  for (double p : {1.0, -1.0}) {
    lp.add_row(std::vector<std::pair<int, double>>{{0, -1.0}, {1, -1.0}}, Relation::kLessEqual, -p);
    lp.add_row(std::vector<std::pair<int, double>>{{0, 1.0}, {1, -1.0}}, Relation::kLessEqual, p);
  }
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_NEAR(r.primal(0), 0.0, 1e-12);
  EXPECT_NEAR(r.primal(1), 1.0, 1e-12);
}

TEST(SolveLp, EqualityAndBounds) {
  // min x + 2y s.t. x + y = 3, 1 <= x <= 2, y free
  LinearProgram lp(2);
  lp.set_objective(Eigen::Vector2d(1.0, 2.0));
  lp.set_bound(0, {1.0, 2.0});
  lp.add_row(Eigen::Vector2d(1.0, 1.0), Relation::kEqual, 3.0);
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 2.0 + 2.0, 1e-12);
  EXPECT_NEAR(r.primal(0), 2.0, 1e-12);
}

// Random bounded 2-variable LPs against vertex enumeration of the feasible
// polygon; also checks strong duality and complementary slackness.
TEST(SolveLp, RandomPlanarAgainstVertexEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 3 + trial % 5;
    Eigen::MatrixXd a(rows + 4, 2);
    Eigen::VectorXd b(rows + 4);
    for (int i = 0; i < rows; ++i) {
      a.row(i) << u(rng), u(rng);
      b(i) = 0.2 + std::abs(u(rng));
    }
    a.bottomRows(4) << 1, 0, -1, 0, 0, 1, 0, -1;
    b.tail(4).setConstant(2.0);
    const Eigen::Vector2d obj(u(rng), u(rng));

    LinearProgram lp(2, Sense::kMaximize);
    lp.set_objective(obj);
    for (int i = 0; i < a.rows(); ++i) lp.add_row(Eigen::VectorXd(a.row(i).transpose()), Relation::kLessEqual, b(i));
    const LpResult r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::kOptimal);

    double best = -std::numeric_limits<double>::infinity();
    oracle::for_each_subset(static_cast<int>(a.rows()), 2, [&](const std::vector<int>& s) {
      Eigen::Matrix2d m;
      m << a.row(s[0]), a.row(s[1]);
      if (std::abs(m.determinant()) < 1e-12) return;
      const Eigen::Vector2d x = m.fullPivLu().solve(Eigen::Vector2d(b(s[0]), b(s[1])));
      if (((a * x) - b).maxCoeff() <= 1e-9) best = std::max(best, obj.dot(x));
    });
    EXPECT_NEAR(r.value, best, 1e-9) << "trial " << trial;
    EXPECT_NEAR(r.dual_value, r.value, 1e-9);
    for (int i = 0; i < a.rows(); ++i) {
      EXPECT_GE(r.dual(i), -1e-12);
      const double slack = b(i) - a.row(i).dot(r.primal);
      EXPECT_LE(std::abs(r.dual(i) * slack), 1e-9);
    }
  }
}

TEST(SolveLp, Deterministic) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  LinearProgram lp(4);
  lp.set_objective(Eigen::Vector4d(u(rng), u(rng), u(rng), u(rng)));
  for (int j = 0; j < 4; ++j) lp.set_bound(j, {-1.0, 1.0});
  for (int i = 0; i < 6; ++i) {
    lp.add_row(Eigen::Vector4d(u(rng), u(rng), u(rng), u(rng)), Relation::kLessEqual, 0.5);
  }
  const LpResult a = solve_lp(lp);
  const LpResult b = solve_lp(lp);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.dual, b.dual);
}

TEST(InConvexHull, SegmentMidpoint) {
  Eigen::MatrixXd g(2, 2);
  g << 1, -1, 0, 0;
  const HullMembership h = in_convex_hull(g, Eigen::Vector2d::Zero());
  ASSERT_TRUE(h.inside);
  EXPECT_NEAR(h.coefficients(0), 0.5, 1e-12);
  EXPECT_NEAR(h.coefficients(1), 0.5, 1e-12);
}

TEST(InConvexHull, SeparatorForOrigin) {
  const Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  const Eigen::VectorXd t = Eigen::Vector2d::Zero();
  const HullMembership h = in_convex_hull(g, t);
  ASSERT_FALSE(h.inside);
  const Eigen::VectorXd dir = h.separator.normalized();
  EXPECT_NEAR(dir(0), -std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(dir(1), -std::sqrt(0.5), 1e-9);
  for (int j = 0; j < 2; ++j) EXPECT_GE(h.separator.dot(t) - h.separator.dot(g.col(j)), 1.0 - 1e-9);
}

TEST(InConvexHull, SimplexNormalsContainOrigin) {
  const Eigen::MatrixXd normals = -regular_simplex_vertices(2);
  const HullMembership h = in_convex_hull(normals, Eigen::Vector2d::Zero());
  ASSERT_TRUE(h.inside);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(h.coefficients(j), 1.0 / 3.0, 1e-9);
}

TEST(InConvexHull, AgreesWithCaratheodoryEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int inside = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 2;
    const int m = 2 + trial % 7;
    Eigen::MatrixXd g(d, m);
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = u(rng);
    Eigen::VectorXd t(d);
    for (int i = 0; i < d; ++i) t(i) = 0.5 * u(rng);
    const HullMembership h = in_convex_hull(g, t);
    ASSERT_EQ(h.inside, oracle::in_hull(g, t)) << "trial " << trial;
    if (h.inside) {
      ++inside;
      EXPECT_LE((g * h.coefficients - t).norm(), 1e-9);
      EXPECT_NEAR(h.coefficients.sum(), 1.0, 1e-9);
      EXPECT_GE(h.coefficients.minCoeff(), -1e-12);
      EXPECT_LE((h.coefficients.array() > 1e-12).count(), d + 1);
    } else {
      for (int j = 0; j < m; ++j) {
        EXPECT_GE(h.separator.dot(t) - h.separator.dot(g.col(j)), 1.0 - 1e-7);
      }
    }
  }
  EXPECT_GT(inside, 30);
}

TEST(ConicGauge, BoxVertices) {
  Eigen::MatrixXd v(2, 4);
  v << 1, 1, -1, -1, 1, -1, 1, -1;
  EXPECT_NEAR(conic_gauge(v, Eigen::Vector2d(0.5, -0.25)), 0.5, 1e-12);
  EXPECT_TRUE(std::isinf(conic_gauge(Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(-1, 0))));
}
