#include "contain/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace contain {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      const double out = *spare_;
      spare_.reset();
      return out;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
  }

  Eigen::VectorXd gaussian(int d) {
    Eigen::VectorXd g(d);
    for (int i = 0; i < d; ++i) g(i) = normal();
    return g;
  }

  Eigen::VectorXd direction(int d) {
    for (;;) {
      Eigen::VectorXd g = gaussian(d);
      const double nrm = g.norm();
      if (nrm > 1e-12) return g / nrm;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::int64_t choose(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > (std::int64_t{1} << 52)) return out;
  }
  return out;
}

Eigen::MatrixXd sign_patterns(int d) {
  const int count = 1 << d;
  Eigen::MatrixXd out(d, count);
  for (int mask = 0; mask < count; ++mask) {
    for (int i = 0; i < d; ++i) out(i, mask) = (mask >> i) & 1 ? -1.0 : 1.0;
  }
  return out;
}

Eigen::MatrixXd plus_minus_identity(int d) {
  Eigen::MatrixXd out(d, 2 * d);
  out << Eigen::MatrixXd::Identity(d, d), -Eigen::MatrixXd::Identity(d, d);
  return out;
}

Eigen::MatrixXd cap_normals(int d) {
  const Eigen::MatrixXd x = regular_simplex_vertices(d);
  Eigen::MatrixXd out(d, 2 * (d + 1));
  out << -x, x;
  return out;
}

}  // namespace

Eigen::MatrixXd regular_simplex_vertices(int d) {
  require(d >= 1, ErrorCode::kInvalidArgument, "simplex dimension must be >= 1");
  if (d == 1) return (Eigen::MatrixXd(1, 2) << 1.0, -1.0).finished();
  const Eigen::MatrixXd lower = regular_simplex_vertices(d - 1);
  const double root = std::sqrt(static_cast<double>(d));
  const double stretch = std::sqrt((d + 1.0) / d);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d + 1);
  out(0, 0) = root;
  for (int j = 0; j < d; ++j) {
    out(0, j + 1) = -1.0 / root;
    out.block(1, j + 1, d - 1, 1) = stretch * lower.col(j);
  }
  return out;
}

SimplexInstance regular_simplex(int d, const Tolerance& tol) {
  Eigen::MatrixXd x = regular_simplex_vertices(d);
  return {PointSet(x), Container::dual(-x, x, tol)};
}

Container neg_simplex(int d, const Tolerance& tol) {
  const Eigen::MatrixXd x = regular_simplex_vertices(d);
  return Container::dual(x, -x, tol);
}

Container simplex_cap_neg(int d, const Tolerance& tol) {
  return vertex_enumeration(cap_normals(d), tol);
}

Container symmetric_counterexample(int d, int k, const Tolerance& tol) {
  require(1 <= k && k <= d, ErrorCode::kInvalidArgument,
          "symmetric counterexample needs 1 <= k <= d");
  if (k == d) return simplex_cap_neg(d, tol);
  const Container base = simplex_cap_neg(k, tol);
  const int extra = d - k;
  const Eigen::MatrixXd& bn = base.normals();
  Eigen::MatrixXd normals = Eigen::MatrixXd::Zero(d, bn.cols() + 2 * extra);
  normals.topLeftCorner(k, bn.cols()) = bn;
  normals.bottomRightCorner(extra, 2 * extra) = plus_minus_identity(extra);

  const Eigen::MatrixXd& bv = base.vertices();
  const Eigen::MatrixXd corners = sign_patterns(extra);
  Eigen::MatrixXd vertices(d, bv.cols() * corners.cols());
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < bv.cols(); ++i) {
    for (Eigen::Index j = 0; j < corners.cols(); ++j, ++col) {
      vertices.block(0, col, k, 1) = bv.col(i);
      vertices.block(k, col, extra, 1) = corners.col(j);
    }
  }
  return Container::dual(std::move(normals), std::move(vertices), tol);
}

Container standard_container(const std::string& name, int d, const Tolerance& tol) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (name == "ball") return Container::ball(d);
  if (name == "box") return Container::dual(plus_minus_identity(d), sign_patterns(d), tol);
  if (name == "cross") return Container::dual(sign_patterns(d), plus_minus_identity(d), tol);
  throw Error(ErrorCode::kInvalidArgument, "unknown standard container '" + name + "'");
}

Container named_container(const std::string& name, int d, std::optional<int> k,
                          const Tolerance& tol) {
  if (name == "ball" || name == "box" || name == "cross") return standard_container(name, d, tol);
  if (name == "simplex") return regular_simplex(d, tol).body;
  if (name == "neg-simplex") return neg_simplex(d, tol);
  if (name == "simplex-cap-neg") return simplex_cap_neg(d, tol);
  if (name == "symmetric-counterexample") {
    require(k.has_value(), ErrorCode::kInvalidArgument,
            "symmetric-counterexample needs k");
    return symmetric_counterexample(d, *k, tol);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown container family '" + name + "'");
}

PointSet box_ambiguity_instance(int d, double tau) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be >= 1");
  require(-1.0 <= tau && tau <= 1.0, ErrorCode::kInvalidArgument, "tau must lie in [-1, 1]");
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(d, 2 * d);
  for (int i = 0; i + 1 < d; ++i) {
    pts(i, 2 * i) = tau + 1.0;
    pts(i, 2 * i + 1) = tau - 1.0;
  }
  pts(d - 1, 2 * d - 2) = 1.0;
  pts(d - 1, 2 * d - 1) = -1.0;
  return PointSet(std::move(pts));
}

const char* to_string(Distribution dist) {
  switch (dist) {
    case Distribution::kBallUniform: return "ball-uniform";
    case Distribution::kSphere: return "sphere";
    case Distribution::kGauss: return "gauss";
    case Distribution::kSimplexHull: return "simplex-hull";
  }
  return "unknown";
}

Distribution parse_distribution(const std::string& name) {
  for (Distribution d : {Distribution::kBallUniform, Distribution::kSphere,
                         Distribution::kGauss, Distribution::kSimplexHull}) {
    if (name == to_string(d)) return d;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown distribution '" + name + "'");
}

PointSet random_pointset(int n, int d, std::uint64_t seed, Distribution dist) {
  require(n >= 1 && d >= 1, ErrorCode::kInvalidArgument, "need n >= 1 and d >= 1");
  Rng rng(seed);
  Eigen::MatrixXd pts(d, n);
  Eigen::MatrixXd simplex;
  if (dist == Distribution::kSimplexHull) simplex = regular_simplex_vertices(d);
  for (int i = 0; i < n; ++i) {
    switch (dist) {
      case Distribution::kBallUniform: {
        const Eigen::VectorXd u = rng.direction(d);
        pts.col(i) = std::pow(rng.uniform(), 1.0 / d) * u;
        break;
      }
      case Distribution::kSphere:
        pts.col(i) = rng.direction(d);
        break;
      case Distribution::kGauss:
        pts.col(i) = rng.gaussian(d);
        break;
      case Distribution::kSimplexHull: {
        Eigen::VectorXd w(d + 1);
        for (int j = 0; j <= d; ++j) w(j) = -std::log(1.0 - rng.uniform());
        w /= w.sum();
        pts.col(i) = simplex * w;
        break;
      }
    }
  }
  return PointSet(std::move(pts));
}

Container vertex_enumeration(const Eigen::MatrixXd& normals, const Tolerance& tol,
                             std::int64_t budget) {
  const int d = static_cast<int>(normals.rows());
  const int m = static_cast<int>(normals.cols());
  require(d >= 1 && m > d, ErrorCode::kInvalidContainer,
          "vertex enumeration needs more normals than dimensions");
  const std::int64_t total = choose(m, d);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "vertex enumeration needs " + std::to_string(total) +
                    " subsets, budget is " + std::to_string(budget));
  }
  const double dedup = 10.0 * tol.eq;
  std::vector<Eigen::VectorXd> found;
  std::vector<int> comb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd sys(d, d);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(d);
  for (;;) {
    for (int r = 0; r < d; ++r) sys.row(r) = normals.col(comb[static_cast<std::size_t>(r)]).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    lu.setThreshold(tol.pivot);
    if (lu.rank() == d) {
      const Eigen::VectorXd x = lu.solve(ones);
      if ((normals.transpose() * x).maxCoeff() <= 1.0 + tol.feas) {
        const bool dup = std::any_of(found.begin(), found.end(), [&](const Eigen::VectorXd& v) {
          return (v - x).cwiseAbs().maxCoeff() <= dedup;
        });
        if (!dup) found.push_back(x);
      }
    }
    int i = d - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - d + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  require(static_cast<int>(found.size()) > d, ErrorCode::kInvalidContainer,
          "H-polytope is unbounded or degenerate");
  Eigen::MatrixXd verts(d, static_cast<Eigen::Index>(found.size()));
  for (std::size_t j = 0; j < found.size(); ++j) verts.col(static_cast<Eigen::Index>(j)) = found[j];
  return Container::dual(normals, std::move(verts), tol);
}

Instance make_instance(const InstanceSpec& spec, const Tolerance& tol) {
  const int d = spec.d;
  require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (spec.family == "box-ambiguity") {
    return {box_ambiguity_instance(d, spec.tau.value_or(0.0)), standard_container("box", d, tol)};
  }
  if (spec.family == "random") {
    const int n = spec.n.value_or(10);
    return {random_pointset(n, d, spec.seed.value_or(1),
                            spec.distribution.value_or(Distribution::kBallUniform)),
            Container::ball(d)};
  }
  if (spec.family == "regular-simplex") {
    SimplexInstance s = regular_simplex(d, tol);
    return {std::move(s.vertices), std::move(s.body)};
  }
  Container c = named_container(spec.family, d, spec.k, tol);
  PointSet pts(c.is_ball() ? plus_minus_identity(d) : c.vertices());
  return {std::move(pts), std::move(c)};
}

}  // namespace contain
