#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "contain/geometry.hpp"

namespace contain {

// Regular simplex with ||x_i||^2 = d and x_i . x_j = -1, as matrix columns.
Eigen::MatrixXd regular_simplex_vertices(int d);

struct SimplexInstance {
  PointSet vertices;
  Container body;  // T^d with normals a_j = -x_j and unit offsets
};

SimplexInstance regular_simplex(int d, const Tolerance& tol = {});

// -T^d.
Container neg_simplex(int d, const Tolerance& tol = {});

// C^d = T^d cap (-T^d).
Container simplex_cap_neg(int d, const Tolerance& tol = {});

// (T^k cap -T^k) x [-1, 1]^(d-k).
Container symmetric_counterexample(int d, int k, const Tolerance& tol = {});

// "ball", "box" or "cross".
Container standard_container(const std::string& name, int d, const Tolerance& tol = {});

// Named container families understood by the CLI: ball, box, cross, simplex,
// neg-simplex, simplex-cap-neg, symmetric-counterexample (needs k).
Container named_container(const std::string& name, int d, std::optional<int> k = std::nullopt,
                          const Tolerance& tol = {});

// (tau+1)e_1, (tau-1)e_1, ..., (tau+1)e_{d-1}, (tau-1)e_{d-1}, e_d, -e_d.
PointSet box_ambiguity_instance(int d, double tau);

enum class Distribution { kBallUniform, kSphere, kGauss, kSimplexHull };

const char* to_string(Distribution dist);
Distribution parse_distribution(const std::string& name);

// Generator: std::mt19937_64 seeded with `seed`. Uniforms take the top 53 bits
// of one draw; normals use Box-Muller on two uniforms. Ball-uniform scales a
// normalized Gaussian by u^(1/d); simplex-hull draws Dirichlet(1,..,1) weights
// over the T^d vertices.
PointSet random_pointset(int n, int d, std::uint64_t seed, Distribution dist);

// Vertices of {x : a_k . x <= 1} by brute force over d-subsets of constraints.
// Throws kBudgetExceeded when there are more than `budget` subsets.
Container vertex_enumeration(const Eigen::MatrixXd& normals, const Tolerance& tol = {},
                             std::int64_t budget = 1'000'000);

struct InstanceSpec {
  std::string family;
  int d = 2;
  std::optional<int> k;
  std::optional<double> tau;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<Distribution> distribution;
};

struct Instance {
  PointSet points;
  std::optional<Container> container;
};

// Container families yield their own vertex set (the ball yields +-e_i);
// "box-ambiguity" yields the box instance; "random" a seeded point set.
Instance make_instance(const InstanceSpec& spec, const Tolerance& tol = {});

}  // namespace contain
