#include <gtest/gtest.h>

#include "contain/containment.hpp"
#include "contain/coresets.hpp"
#include "contain/instances.hpp"
#include "oracles.hpp"

using namespace contain;

namespace {

std::vector<int> diametral_pair(const PointSet& p) {
  std::vector<int> best{0, 1};
  double dist = -1.0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      const double d = (p.point(i) - p.point(j)).norm();
      if (d > dist) {
        dist = d;
        best = {i, j};
      }
    }
  }
  return best;
}

// Smallest |S| with R(P, box) <= (1 + eps) R(S, box), by enumeration.
int brute_box_coreset_size(const PointSet& p, double eps) {
  const double full = oracle::box_radius(p.coords());
  for (int r = 1; r <= p.size(); ++r) {
    bool ok = false;
    oracle::for_each_subset(p.size(), r, [&](const std::vector<int>& s) {
      if (!ok && full <= (1.0 + eps) * oracle::box_radius(oracle::columns(p.coords(), s)) + 1e-9) ok = true;
    });
    if (ok) return r;
  }
  return p.size();
}

}  // namespace

TEST(Greedy, PairAlreadyCovers) {
  Eigen::MatrixXd p(2, 3);
  p << 0, 2, 1, 0, 0, 0.1;
  const CoreSet cs = greedy_coreset(PointSet(p), Container::ball(2), 0.1);
  EXPECT_EQ(cs.indices, (std::vector<int>{0, 1}));
  EXPECT_NEAR(cs.radius, 1.0, 1e-12);
}

TEST(Greedy, SimplexInNegSimplexNeedsAllVertices) {
  for (int d = 2; d <= 5; ++d) {
    const SimplexInstance t = regular_simplex(d);
    const CoreSet cs = greedy_coreset(t.vertices, neg_simplex(d), 0.5);
    EXPECT_EQ(static_cast<int>(cs.indices.size()), d + 1) << d;
  }
}

TEST(Greedy, RandomBallSet) {
  const PointSet p = random_pointset(64, 3, 2024, Distribution::kBallUniform);
  const Container ball = Container::ball(3);
  const CoreSet cs = greedy_coreset(p, ball, 0.3);
  EXPECT_LE(cs.indices.size(), 3u);
  const double rs = subset_radius(p, cs.indices, ball);
  EXPECT_NEAR(rs, cs.radius, 1e-9);
  EXPECT_LE(covering_radius(p, ball, cs.center), (1.0 + cs.eps_achieved) * rs + 1e-9);
  EXPECT_LE(cs.eps_achieved, 0.3 + 1e-9);
}

TEST(Greedy, OutputIsCenterConformAtAchievedEps) {
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 3;
    const PointSet p = random_pointset(10 + trial % 10, d, 5000 + trial, static_cast<Distribution>(trial % 4));
    for (const Container& c : {Container::ball(d), standard_container("box", d), neg_simplex(d)}) {
      const CoreSet cs = greedy_coreset(p, c, 0.25);
      EXPECT_TRUE(validate_coreset(p, c, cs.indices, cs.eps_achieved, true)) << "trial " << trial;
    }
  }
}

TEST(ZeroCoreset, SimplexPlusCentroid) {
  const SimplexInstance t = regular_simplex(2);
  Eigen::MatrixXd p(2, 4);
  p << t.vertices.coords(), Eigen::Vector2d::Zero();
  const CoreSet cs = extract_zero_coreset(PointSet(p), neg_simplex(2));
  EXPECT_EQ(cs.indices, (std::vector<int>{0, 1, 2}));
}

TEST(ZeroCoreset, RandomBoxInstance) {
  const PointSet p = random_pointset(100, 2, 99, Distribution::kGauss);
  const Container box = standard_container("box", 2);
  const CoreSet cs = extract_zero_coreset(p, box);
  EXPECT_LE(cs.indices.size(), 3u);
  EXPECT_NEAR(cs.radius, oracle::box_radius(p.coords()), 1e-9);
}

TEST(ZeroCoreset, TwoPoints) {
  Eigen::MatrixXd p(3, 2);
  p << 0, 1, 0, 2, 0, 3;
  for (const Container& c : {Container::ball(3), neg_simplex(3)}) {
    const CoreSet cs = extract_zero_coreset(PointSet(p), c);
    EXPECT_EQ(cs.indices, (std::vector<int>{0, 1}));
    EXPECT_EQ(cs.eps_achieved, 0.0);
  }
}

TEST(OptimalSize, NegSimplex) {
  const SimplexInstance t = regular_simplex(3);
  const Container neg = neg_simplex(3);
  EXPECT_EQ(optimal_coreset_size(t.vertices, neg, 0.4), 4);
  EXPECT_EQ(optimal_coreset_size(t.vertices, neg, 0.5), 3);
  EXPECT_EQ(optimal_coreset_size(t.vertices, neg, 2.0), 2);
}

TEST(OptimalSize, AgainstBruteForceOnBox) {
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const PointSet p = random_pointset(6 + trial % 3, d, 6000 + trial, static_cast<Distribution>(trial % 4));
    for (double eps : {0.0, 0.1, 0.5}) {
      EXPECT_EQ(optimal_coreset_size(p, standard_container("box", d), eps), brute_box_coreset_size(p, eps));
    }
    // Parallelotopes admit zero core-sets of size two.
    EXPECT_EQ(optimal_coreset_size(p, standard_container("box", d), 0.0), 2);
  }
}

TEST(Validate, Examples) {
  const PointSet p = random_pointset(25, 5, 12, Distribution::kGauss);
  const Container ball = Container::ball(5);
  EXPECT_TRUE(validate_coreset(p, ball, diametral_pair(p), std::sqrt(2.0) - 1.0, false));

  std::vector<int> all(25);
  for (int i = 0; i < 25; ++i) all[static_cast<std::size_t>(i)] = i;
  EXPECT_TRUE(validate_coreset(p, ball, all, 0.0, true));

  for (int d = 2; d <= 6; ++d) {
    const SimplexInstance t = regular_simplex(d);
    std::vector<int> s(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) s[static_cast<std::size_t>(i)] = i;
    const Container neg = neg_simplex(d);
    EXPECT_EQ(validate_coreset(t.vertices, neg, s, 0.9, false), d / (d - 1.0) <= 1.9) << d;
    EXPECT_FALSE(validate_coreset(t.vertices, neg, s, 0.9, true)) << d;
  }
}

TEST(Validate, BoxAmbiguity) {
  const PointSet p = box_ambiguity_instance(3, 1.0);
  const Container box = standard_container("box", 3);
  const std::vector<int> s{4, 5};
  EXPECT_NEAR(subset_radius(p, s, box), 1.0, 1e-12);
  EXPECT_TRUE(validate_coreset(p, box, s, 0.0, false));
  EXPECT_TRUE(validate_coreset(p, box, s, 0.0, true, {}, CenterMode::kSearch));
  EXPECT_FALSE(validate_coreset(p, box, s, 0.9, true, {}, CenterMode::kFixed));
}

TEST(CenterConformity, Factor) {
  const double eps = std::sqrt(2.0) - 1.0;
  EXPECT_NEAR(center_conformity_factor(eps), 1.0 + eps + std::sqrt(2.0 * eps + eps * eps), 1e-15);
  // (1 + eps)^2 = 2 here, so the factor is exactly 1 + sqrt(2).
  EXPECT_NEAR(center_conformity_factor(eps), 1.0 + std::sqrt(2.0), 1e-12);
  EXPECT_EQ(center_conformity_factor(0.0), 1.0);
  const PointSet p = random_pointset(30, 4, 5, Distribution::kSphere);
  EXPECT_TRUE(center_conformity_bound_check(p, diametral_pair(p), eps));
  std::vector<int> all(30);
  for (int i = 0; i < 30; ++i) all[static_cast<std::size_t>(i)] = i;
  EXPECT_TRUE(center_conformity_bound_check(p, all, 0.0));
  EXPECT_THROW(center_conformity_bound_check(p, standard_container("box", 4), all, 0.0), Error);
}

TEST(CenterConformity, GreedyCorpus) {
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 5;
    const PointSet p = random_pointset(20, d, 7000 + trial, static_cast<Distribution>(trial % 4));
    const CoreSet cs = greedy_coreset(p, Container::ball(d), 0.2);
    EXPECT_TRUE(center_conformity_bound_check(p, cs.indices, cs.eps_achieved));
  }
}
