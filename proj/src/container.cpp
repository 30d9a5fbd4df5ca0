#include <algorithm>
#include <cmath>
#include <string>

#include "contain/geometry.hpp"
#include "contain/lp.hpp"

namespace contain {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kInvalidContainer: return "INVALID_CONTAINER";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kNumericalFailure: return "NUMERICAL_FAILURE";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kMissingRepresentation: return "MISSING_REPRESENTATION";
  }
  return "?";
}

const char* to_string(ContainerKind kind) {
  switch (kind) {
    case ContainerKind::kHPoly: return "hpoly";
    case ContainerKind::kVPoly: return "vpoly";
    case ContainerKind::kDual: return "dual";
    case ContainerKind::kBall: return "ball";
  }
  return "?";
}

PointSet::PointSet(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
  require(coords_.rows() >= 1, ErrorCode::kInvalidArgument,
          "point set dimension must be positive");
  require(coords_.cols() >= 1, ErrorCode::kInvalidArgument,
          "point set must be nonempty");
  require(coords_.allFinite(), ErrorCode::kInvalidArgument,
          "point coordinates must be finite");
}

PointSet PointSet::from_points(const std::vector<Point>& points) {
  require(!points.empty(), ErrorCode::kInvalidArgument, "point set must be nonempty");
  const auto d = points.front().size();
  Eigen::MatrixXd coords(d, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(points[i].size() == d, ErrorCode::kDimensionMismatch,
            "points of differing dimension");
    coords.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return PointSet(std::move(coords));
}

PointSet PointSet::subset(std::span<const int> indices) const {
  Eigen::MatrixXd coords(dim(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] >= 0 && indices[i] < size(), ErrorCode::kInvalidArgument,
            "subset index out of range");
    coords.col(static_cast<Eigen::Index>(i)) = coords_.col(indices[i]);
  }
  return PointSet(std::move(coords));
}

PointSet PointSet::translated(const Point& t) const {
  require(t.size() == dim(), ErrorCode::kDimensionMismatch, "translation dimension");
  return PointSet(coords_.colwise() + t);
}

PointSet PointSet::scaled(double factor) const { return PointSet(coords_ * factor); }

namespace {

// The origin is interior to conv(G) iff the columns of G positively span R^d,
// i.e. every +-e_i lies in their cone.
bool origin_interior(const Eigen::MatrixXd& generators, const Tolerance& tol) {
  const auto d = generators.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (double s : {1.0, -1.0}) {
      const Eigen::VectorXd e = s * Eigen::VectorXd::Unit(d, i);
      if (!std::isfinite(conic_gauge(generators, e, tol))) return false;
    }
  }
  return true;
}

void check_matrix(const Eigen::MatrixXd& m, const char* what) {
  require(m.rows() >= 1 && m.cols() >= 1, ErrorCode::kInvalidContainer,
          std::string(what) + " list is empty");
  require(m.allFinite(), ErrorCode::kInvalidContainer,
          std::string(what) + " must be finite");
}

double hrep_gauge(const Eigen::MatrixXd& normals,
                  const Eigen::Ref<const Eigen::VectorXd>& x) {
  return std::max(0.0, (normals.transpose() * x).maxCoeff());
}

}  // namespace

Container Container::ball(int dim) {
  require(dim >= 1, ErrorCode::kInvalidContainer, "dimension must be positive");
  return Container(ContainerKind::kBall, dim, std::nullopt, std::nullopt);
}

Container Container::from_normals(Eigen::MatrixXd normals, const Tolerance& tol) {
  check_matrix(normals, "normal");
  require(origin_interior(normals, tol), ErrorCode::kInvalidContainer,
          "H-polytope is unbounded: origin not interior to conv(normals)");
  const int d = static_cast<int>(normals.rows());
  return Container(ContainerKind::kHPoly, d, std::move(normals), std::nullopt);
}

Container Container::from_halfspaces(Eigen::MatrixXd normals,
                                     const Eigen::VectorXd& offsets,
                                     const Tolerance& tol) {
  require(offsets.size() == normals.cols(), ErrorCode::kDimensionMismatch,
          "one offset per normal required");
  for (Eigen::Index k = 0; k < offsets.size(); ++k) {
    require(offsets(k) > 0.0, ErrorCode::kInvalidContainer,
            "offsets must be positive so the origin is interior");
    normals.col(k) /= offsets(k);
  }
  return from_normals(std::move(normals), tol);
}

Container Container::from_vertices(Eigen::MatrixXd vertices, const Tolerance& tol) {
  check_matrix(vertices, "vertex");
  require(origin_interior(vertices, tol), ErrorCode::kInvalidContainer,
          "origin is not interior to conv(vertices)");
  const int d = static_cast<int>(vertices.rows());
  return Container(ContainerKind::kVPoly, d, std::nullopt, std::move(vertices));
}

Container Container::dual(Eigen::MatrixXd normals, Eigen::MatrixXd vertices,
                          const Tolerance& tol) {
  check_matrix(normals, "normal");
  check_matrix(vertices, "vertex");
  require(normals.rows() == vertices.rows(), ErrorCode::kDimensionMismatch,
          "normals and vertices differ in dimension");
  require(origin_interior(normals, tol), ErrorCode::kInvalidContainer,
          "H-polytope is unbounded: origin not interior to conv(normals)");
  require(origin_interior(vertices, tol), ErrorCode::kInvalidContainer,
          "origin is not interior to conv(vertices)");

  // Every vertex lies on the H-boundary, and both gauges agree on probes.
  const double slack = 10.0 * tol.eq;
  for (Eigen::Index j = 0; j < vertices.cols(); ++j) {
    const double g = hrep_gauge(normals, vertices.col(j));
    require(std::abs(g - 1.0) <= slack, ErrorCode::kInvalidContainer,
            "vertex " + std::to_string(j) + " is not on the H-boundary");
  }
  const auto d = normals.rows();
  std::vector<Eigen::VectorXd> probes;
  for (Eigen::Index i = 0; i < d; ++i) {
    probes.push_back(Eigen::VectorXd::Unit(d, i));
    probes.push_back(-Eigen::VectorXd::Unit(d, i));
  }
  for (Eigen::Index k = 0; k < normals.cols(); ++k) {
    probes.push_back(normals.col(k));
  }
  for (const auto& x : probes) {
    const double gh = hrep_gauge(normals, x);
    const double gv = conic_gauge(vertices, x, tol);
    require(std::abs(gh - gv) <= slack * std::max(1.0, gh),
            ErrorCode::kInvalidContainer,
            "H- and V-representations describe different bodies");
  }
  const int dim = static_cast<int>(d);
  return Container(ContainerKind::kDual, dim, std::move(normals), std::move(vertices));
}

const Eigen::MatrixXd& Container::normals() const {
  require(has_normals(), ErrorCode::kMissingRepresentation,
          std::string(to_string(kind_)) + " container has no H-representation");
  return *normals_;
}

const Eigen::MatrixXd& Container::vertices() const {
  require(has_vertices(), ErrorCode::kMissingRepresentation,
          std::string(to_string(kind_)) + " container has no V-representation");
  return *vertices_;
}

double gauge(const Container& c, const Eigen::Ref<const Eigen::VectorXd>& x,
             const Tolerance& tol) {
  require(x.size() == c.dim(), ErrorCode::kDimensionMismatch,
          "point dimension differs from container");
  switch (c.kind()) {
    case ContainerKind::kBall:
      return x.norm();
    case ContainerKind::kHPoly:
    case ContainerKind::kDual:
      return hrep_gauge(c.normals(), x);
    case ContainerKind::kVPoly:
      return conic_gauge(c.vertices(), x, tol);
  }
  return 0.0;
}

double support(const Container& c, const Eigen::Ref<const Eigen::VectorXd>& a) {
  require(a.size() == c.dim(), ErrorCode::kDimensionMismatch,
          "direction dimension differs from container");
  if (c.is_ball()) return a.norm();
  return (c.vertices().transpose() * a).maxCoeff();
}

Container reflect(const Container& c) {
  std::optional<Eigen::MatrixXd> normals;
  std::optional<Eigen::MatrixXd> vertices;
  if (c.normals_) normals = -*c.normals_;
  if (c.vertices_) vertices = -*c.vertices_;
  return Container(c.kind_, c.dim_, std::move(normals), std::move(vertices));
}

double covering_radius(const PointSet& points, const Container& c,
                       const Eigen::Ref<const Eigen::VectorXd>& center,
                       const Tolerance& tol) {
  require(points.dim() == c.dim() && center.size() == c.dim(),
          ErrorCode::kDimensionMismatch, "covering radius dimension mismatch");
  if (c.is_ball()) {
    return (points.coords().colwise() - center).colwise().norm().maxCoeff();
  }
  if (c.has_normals()) {
    const Eigen::MatrixXd shifted = points.coords().colwise() - center;
    return std::max(0.0, (c.normals().transpose() * shifted).maxCoeff());
  }
  double worst = 0.0;
  for (int i = 0; i < points.size(); ++i) {
    worst = std::max(worst, gauge(c, points.point(i) - center, tol));
  }
  return worst;
}

}  // namespace contain
