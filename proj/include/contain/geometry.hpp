#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "contain/tolerance.hpp"

namespace contain {

using Point = Eigen::VectorXd;

// Finite point set in R^d; points are the columns of coords().
class PointSet {
 public:
  explicit PointSet(Eigen::MatrixXd coords);
  static PointSet from_points(const std::vector<Point>& points);

  int dim() const { return static_cast<int>(coords_.rows()); }
  int size() const { return static_cast<int>(coords_.cols()); }
  auto point(int i) const { return coords_.col(i); }
  const Eigen::MatrixXd& coords() const { return coords_; }

  PointSet subset(std::span<const int> indices) const;
  PointSet translated(const Point& t) const;
  PointSet scaled(double factor) const;

 private:
  Eigen::MatrixXd coords_;
};

enum class ContainerKind { kHPoly, kVPoly, kDual, kBall };

const char* to_string(ContainerKind kind);

// Full-dimensional convex body with the origin in its interior.
//
// H-representations are stored with unit offsets, {x : a_k . x <= 1}; normals
// and vertices are matrix columns. Construction validates boundedness and the
// interior origin, and for dual descriptions that both lists describe the same
// body.
class Container {
 public:
  static Container ball(int dim);
  static Container from_normals(Eigen::MatrixXd normals, const Tolerance& tol = {});
  // {x : a_k . x <= b_k} with every b_k > 0, rescaled to unit offsets.
  static Container from_halfspaces(Eigen::MatrixXd normals,
                                   const Eigen::VectorXd& offsets,
                                   const Tolerance& tol = {});
  static Container from_vertices(Eigen::MatrixXd vertices, const Tolerance& tol = {});
  static Container dual(Eigen::MatrixXd normals, Eigen::MatrixXd vertices,
                        const Tolerance& tol = {});

  ContainerKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_ball() const { return kind_ == ContainerKind::kBall; }
  bool has_normals() const { return normals_.has_value(); }
  bool has_vertices() const { return vertices_.has_value(); }

  // Throw Error(kMissingRepresentation) when the list is absent.
  const Eigen::MatrixXd& normals() const;
  const Eigen::MatrixXd& vertices() const;

  int num_normals() const { return has_normals() ? static_cast<int>(normals_->cols()) : 0; }
  int num_vertices() const { return has_vertices() ? static_cast<int>(vertices_->cols()) : 0; }

 private:
  Container(ContainerKind kind, int dim, std::optional<Eigen::MatrixXd> normals,
            std::optional<Eigen::MatrixXd> vertices)
      : kind_(kind), dim_(dim), normals_(std::move(normals)),
        vertices_(std::move(vertices)) {}

  ContainerKind kind_;
  int dim_;
  std::optional<Eigen::MatrixXd> normals_;
  std::optional<Eigen::MatrixXd> vertices_;

  friend Container reflect(const Container& c);
};

// Minkowski functional min{rho >= 0 : x in rho C}.
double gauge(const Container& c, const Eigen::Ref<const Eigen::VectorXd>& x,
             const Tolerance& tol = {});

// h_C(a) = max over C of a.x; needs a vertex list or a ball.
double support(const Container& c, const Eigen::Ref<const Eigen::VectorXd>& a);

Container reflect(const Container& c);

inline bool contains(const Container& c, const Eigen::Ref<const Eigen::VectorXd>& x,
                     const Tolerance& tol = {}) {
  return gauge(c, x, tol) <= 1.0 + tol.feas;
}

// max_i gauge(C, p_i - center).
double covering_radius(const PointSet& points, const Container& c,
                       const Eigen::Ref<const Eigen::VectorXd>& center,
                       const Tolerance& tol = {});

}  // namespace contain
