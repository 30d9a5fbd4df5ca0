#include "contain/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "contain/containment.hpp"
#include "contain/coresets.hpp"
#include "contain/instances.hpp"
#include "contain/meb.hpp"
#include "contain/radii.hpp"

namespace contain {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string kv(const std::string& key, double v) { return key + "=" + fmt(v); }

int ceil_robust(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

// Rows that throw become failing rows carrying the error text.
void guarded(ExperimentReport& rep, const std::string& instance, const std::string& param,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ReportRow row;
    row.instance = instance;
    row.param = param;
    row.computed = std::numeric_limits<double>::quiet_NaN();
    row.reference = std::numeric_limits<double>::quiet_NaN();
    row.deviation = std::numeric_limits<double>::infinity();
    row.error = e.what();
    rep.rows.push_back(std::move(row));
  }
}

Eigen::MatrixXd embed(const Eigen::MatrixXd& x, int d) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, x.cols());
  out.topRows(x.rows()) = x;
  return out;
}

// Random polytope conv(+-0.3 e_i, m points on the sphere); always has 0 inside.
Container random_polytope(int d, std::uint64_t seed, const Tolerance& tol) {
  const PointSet sphere = random_pointset(d + 3, d, seed, Distribution::kSphere);
  Eigen::MatrixXd v(d, 2 * d + sphere.size());
  v << 0.3 * Eigen::MatrixXd::Identity(d, d), -0.3 * Eigen::MatrixXd::Identity(d, d),
      sphere.coords();
  return Container::from_vertices(std::move(v), tol);
}

Container random_parallelotope(int d, std::uint64_t seed, const Tolerance& tol) {
  const PointSet g = random_pointset(d, d, seed, Distribution::kGauss);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) + 0.3 * g.coords();
  const Container box = standard_container("box", d, tol);
  const Eigen::MatrixXd normals = a.transpose().inverse() * box.normals();
  return Container::dual(normals, a * box.vertices(), tol);
}

struct Corpus {
  std::string name;
  PointSet points;
};

// Seeded random point sets cycling through distributions, d in [dmin, dmax].
std::vector<Corpus> random_corpus(int count, int dmin, int dmax, int nmin, int nmax,
                                  std::uint64_t seed) {
  static constexpr Distribution kDists[] = {Distribution::kBallUniform, Distribution::kGauss,
                                            Distribution::kSphere, Distribution::kSimplexHull};
  std::vector<Corpus> out;
  for (int i = 0; i < count; ++i) {
    const int d = dmin + i % (dmax - dmin + 1);
    const int n = nmin + (i / (dmax - dmin + 1)) % (nmax - nmin + 1);
    const Distribution dist = kDists[i % 4];
    const std::uint64_t s = seed * 1'000'003ULL + static_cast<std::uint64_t>(i);
    out.push_back({std::string(to_string(dist)) + " n=" + std::to_string(n) +
                       " d=" + std::to_string(d) + " seed=" + std::to_string(s),
                   random_pointset(n, d, s, dist)});
  }
  return out;
}

struct NamedContainer {
  std::string name;
  Container body;
};

std::vector<NamedContainer> container_zoo(int d, std::uint64_t seed, const Tolerance& tol,
                                          bool symmetric_only) {
  std::vector<NamedContainer> out;
  out.push_back({"ball", Container::ball(d)});
  out.push_back({"box", standard_container("box", d, tol)});
  out.push_back({"cross", standard_container("cross", d, tol)});
  out.push_back({"simplex-cap-neg", simplex_cap_neg(d, tol)});
  if (!symmetric_only) {
    out.push_back({"simplex", regular_simplex(d, tol).body});
    out.push_back({"neg-simplex", neg_simplex(d, tol)});
    out.push_back({"random-polytope", random_polytope(d, seed, tol)});
  }
  return out;
}

std::string simplex_name(const std::string& body, int d) {
  return body + " d=" + std::to_string(d);
}

// ---------------------------------------------------------------------------

void exp_asymm(ExperimentReport& rep, const HarnessOptions& o) {
  const double eq = o.tol.eq;
  for (int d = 2; d <= o.lp_max_dim; ++d) {
    guarded(rep, simplex_name("T", d), "R(T,-T)", [&] {
      const SimplexInstance s = regular_simplex(d, o.tol);
      rep.rows.push_back(make_row(simplex_name("T", d), "R(T,-T)",
                                  min_containment(s.vertices, neg_simplex(d, o.tol), o.tol).rho,
                                  d, Check::kEqual, eq));
      rep.rows.push_back(make_row(simplex_name("T", d), "s(T)",
                                  minkowski_asymmetry(s.body, o.tol), d, Check::kEqual, eq));
    });
  }
  for (int d = 2; d <= o.enum_max_dim; ++d) {
    for (const auto& [name, body] : container_zoo(d, o.seed + d, o.tol, false)) {
      if (name == "simplex" || name == "neg-simplex") continue;
      const std::string inst = name + " d=" + std::to_string(d);
      guarded(rep, inst, "s(C)", [&] {
        const double s = minkowski_asymmetry(body, o.tol);
        if (name == "random-polytope") {
          rep.rows.push_back(make_row(inst, "s(C)>=1", s, 1.0, Check::kAtLeast, eq));
          rep.rows.push_back(make_row(inst, "s(C)<=d", s, d, Check::kAtMost, eq));
        } else {
          rep.rows.push_back(make_row(inst, "s(C)", s, 1.0, Check::kEqual, eq));
        }
      });
    }
  }
}

void exp_core_radii_neg_simplex(ExperimentReport& rep, const HarnessOptions& o) {
  for (int d = 2; d <= o.enum_max_dim; ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const Container neg = neg_simplex(d, o.tol);
    for (int k = 1; k <= d; ++k) {
      const std::string inst = simplex_name("T in -T", d);
      guarded(rep, inst, kv("k", k), [&] {
        rep.rows.push_back(make_row(inst, kv("k", k),
                                    core_radius(s.vertices, neg, k, o.tol).value, k,
                                    Check::kEqual, o.tol.eq));
      });
    }
  }
  // R_k / R_l <= k / l on random instances.
  for (const auto& [name, pts] : random_corpus(o.random_instances / 2, 2, 4, 5, 9, o.seed)) {
    const int d = pts.dim();
    const Container c = random_polytope(d, o.seed + 17, o.tol);
    guarded(rep, name, "R_k/R_l<=k/l", [&] {
      std::vector<double> r(static_cast<std::size_t>(d + 1));
      for (int k = 1; k <= d; ++k) r[static_cast<std::size_t>(k)] = core_radius(pts, c, k, o.tol).value;
      for (int l = 1; l <= d; ++l) {
        for (int k = l; k <= d; ++k) {
          rep.rows.push_back(make_row(name + " random-polytope",
                                      "k=" + std::to_string(k) + " l=" + std::to_string(l),
                                      r[static_cast<std::size_t>(k)] / r[static_cast<std::size_t>(l)],
                                      static_cast<double>(k) / l, Check::kAtMost, o.tol.eq));
        }
      }
    });
  }
}

double lemma_cd_value(int d, int k) {
  return 2 * k <= d + 1 ? (d + 1) / 2.0 : static_cast<double>(k);
}

void exp_lemma_cd(ExperimentReport& rep, const HarnessOptions& o) {
  for (int d = 2; d <= o.enum_max_dim; ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const Container cd = simplex_cap_neg(d, o.tol);
    for (int k = 1; k <= d; ++k) {
      const std::string inst = simplex_name("T in C", d);
      guarded(rep, inst, kv("k", k), [&] {
        rep.rows.push_back(make_row(inst, kv("k", k), core_radius(s.vertices, cd, k, o.tol).value,
                                    lemma_cd_value(d, k), Check::kEqual, o.tol.eq));
      });
    }
  }
}

double henk_bound(int k, int l) {
  return std::sqrt(static_cast<double>(k) * (l + 1) / (static_cast<double>(l) * (k + 1)));
}

void exp_henk(ExperimentReport& rep, const HarnessOptions& o) {
  const int dmax = std::min(6, o.enum_max_dim);
  for (int d = 2; d <= dmax; ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const Container ball = Container::ball(d);
    std::vector<double> r(static_cast<std::size_t>(d + 1));
    for (int k = 1; k <= d; ++k) r[static_cast<std::size_t>(k)] = core_radius(s.vertices, ball, k, o.tol).value;
    for (int l = 1; l <= d; ++l) {
      for (int k = l; k <= d; ++k) {
        rep.rows.push_back(make_row(simplex_name("T ball", d),
                                    "k=" + std::to_string(k) + " l=" + std::to_string(l),
                                    r[static_cast<std::size_t>(k)] / r[static_cast<std::size_t>(l)],
                                    henk_bound(k, l), Check::kEqual, o.tol.eq));
      }
    }
  }
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 5, 6, 12, o.seed + 1)) {
    guarded(rep, name, "henk", [&] {
      const int d = pts.dim();
      const Container ball = Container::ball(d);
      std::vector<double> r(static_cast<std::size_t>(d + 1));
      for (int k = 1; k <= d; ++k) r[static_cast<std::size_t>(k)] = core_radius(pts, ball, k, o.tol).value;
      for (int l = 1; l <= d; ++l) {
        for (int k = l + 1; k <= d; ++k) {
          rep.rows.push_back(make_row(name, "k=" + std::to_string(k) + " l=" + std::to_string(l),
                                      r[static_cast<std::size_t>(k)] / r[static_cast<std::size_t>(l)],
                                      henk_bound(k, l), Check::kAtMost, o.tol.eq));
        }
      }
    });
  }
}

void exp_jung(ExperimentReport& rep, const HarnessOptions& o) {
  for (int d = 2; d <= o.lp_max_dim; ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const double full = min_containment(s.vertices, Container::ball(d), o.tol).rho;
    const double pair = std::sqrt(2.0 * d + 2.0) / 2.0;
    rep.rows.push_back(make_row(simplex_name("T ball", d), "R/R(diametral pair)", full / pair,
                                std::sqrt(2.0 * d / (d + 1.0)), Check::kEqual, o.tol.eq));
  }
  const double eps = std::sqrt(2.0) - 1.0;
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 8, 8, 30, o.seed + 2)) {
    guarded(rep, name, "diametral pair", [&] {
      int bi = 0, bj = 1;
      double best = -1.0;
      for (int i = 0; i < pts.size(); ++i) {
        for (int j = i + 1; j < pts.size(); ++j) {
          const double dist = (pts.point(i) - pts.point(j)).norm();
          if (dist > best) {
            best = dist;
            bi = i;
            bj = j;
          }
        }
      }
      const std::vector<int> pair{bi, bj};
      const Container ball = Container::ball(pts.dim());
      const double ratio = min_containment(pts, ball, o.tol).rho / subset_radius(pts, pair, ball, o.tol);
      rep.rows.push_back(make_row(name, "R/R(diametral pair)", ratio, 1.0 + eps, Check::kAtMost, o.tol.eq));
      rep.rows.push_back(make_row(name, kv("core-set eps", eps),
                                  validate_coreset(pts, ball, pair, eps, false, o.tol) ? 1.0 : 0.0,
                                  1.0, Check::kEqual, o.tol.eq));
    });
  }
}

void exp_bohnenblust(ExperimentReport& rep, const HarnessOptions& o) {
  const int dmax = std::min(6, o.enum_max_dim);
  for (int d = 2; d <= dmax; ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const Eigen::MatrixXd& x = s.vertices.coords();
    guarded(rep, simplex_name("T in -T", d), "R/R_1", [&] {
      const Container neg = neg_simplex(d, o.tol);
      const double ratio = min_containment(s.vertices, neg, o.tol).rho /
                           core_radius(s.vertices, neg, 1, o.tol).value;
      rep.rows.push_back(make_row(simplex_name("T in -T", d), "R/R_1", ratio,
                                  (1.0 + d) * d / (d + 1.0), Check::kEqual, o.tol.eq));
    });
    guarded(rep, simplex_name("T in T-T", d), "R/R_1", [&] {
      Eigen::MatrixXd diff(d, (d + 1) * d);
      Eigen::Index col = 0;
      for (Eigen::Index i = 0; i <= d; ++i) {
        for (Eigen::Index j = 0; j <= d; ++j) {
          if (i != j) diff.col(col++) = x.col(i) - x.col(j);
        }
      }
      const Container body = Container::from_vertices(diff, o.tol);
      const double ratio = min_containment(s.vertices, body, o.tol).rho /
                           core_radius(s.vertices, body, 1, o.tol).value;
      rep.rows.push_back(make_row(simplex_name("T in T-T", d), "R/R_1", ratio,
                                  2.0 * d / (d + 1.0), Check::kEqual, o.tol.eq));
    });
  }
  for (const auto& [name, pts] : random_corpus(o.random_instances / 2, 2, 4, 6, 10, o.seed + 3)) {
    const int d = pts.dim();
    for (const auto& [cname, body] : container_zoo(d, o.seed + 31, o.tol, false)) {
      guarded(rep, name + " " + cname, "R/R_1", [&] {
        const double s = minkowski_asymmetry(body, o.tol);
        const double ratio = min_containment(pts, body, o.tol).rho /
                             core_radius(pts, body, 1, o.tol).value;
        rep.rows.push_back(make_row(name + " " + cname, "R/R_1", ratio,
                                    (1.0 + s) * d / (d + 1.0), Check::kAtMost, o.tol.eq));
      });
    }
  }
}

void identity_rows(ExperimentReport& rep, const std::string& inst, const PointSet& pts,
                   const Container& c, int k, const Tolerance& tol) {
  guarded(rep, inst, kv("k", k), [&] {
    const CoreRadiusResult core = core_radius(pts, c, k, tol);
    rep.rows.push_back(make_row(inst, kv("sigma k", k),
                                intersection_radius_check(pts, c, k, tol, core), core.value,
                                Check::kEqual, tol.eq));
    rep.rows.push_back(make_row(inst, kv("pi k", k), cylinder_radius_check(pts, c, k, tol, core),
                                core.value, Check::kEqual, tol.eq));
  });
}

void exp_identity_radii(ExperimentReport& rep, const HarnessOptions& o) {
  for (int d = 2; d <= std::min(5, o.enum_max_dim); ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const std::vector<NamedContainer> bodies{{"-T", neg_simplex(d, o.tol)},
                                             {"C", simplex_cap_neg(d, o.tol)},
                                             {"ball", Container::ball(d)}};
    for (const auto& [cname, body] : bodies) {
      for (int k = 1; k < d; ++k) identity_rows(rep, simplex_name("T in " + cname, d), s.vertices, body, k, o.tol);
    }
  }
  int i = 0;
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 4, 6, 8, o.seed + 4)) {
    const int d = pts.dim();
    const auto zoo = container_zoo(d, o.seed + 41 + i, o.tol, false);
    const auto& entry = zoo[static_cast<std::size_t>(i) % zoo.size()];
    const int k = 1 + i % (d - 1);
    identity_rows(rep, name + " " + entry.name, pts, entry.body, k, o.tol);
    ++i;
  }
}

double symm_bound(int k, int l) {
  return 2 * l <= k + 1 ? 2.0 * k / (k + 1.0) : static_cast<double>(k) / l;
}

void exp_symm_bound(ExperimentReport& rep, const HarnessOptions& o) {
  for (int k = 1; k <= std::min(5, o.enum_max_dim - 1); ++k) {
    for (int d : {k, k + 1}) {
      const std::string inst = "T^" + std::to_string(k) + " in C^k-prism d=" + std::to_string(d);
      guarded(rep, inst, "ratios", [&] {
        const PointSet pts(embed(regular_simplex_vertices(k), d));
        const Container body = symmetric_counterexample(d, k, o.tol);
        const double rk = core_radius(pts, body, k, o.tol).value;
        for (int l = 1; l <= k; ++l) {
          const double rl = core_radius(pts, body, l, o.tol).value;
          rep.rows.push_back(make_row(inst, "k=" + std::to_string(k) + " l=" + std::to_string(l),
                                      rk / rl, symm_bound(k, l), Check::kEqual, o.tol.eq));
        }
      });
    }
  }
  for (const auto& [name, pts] : random_corpus(o.random_instances / 2, 2, 4, 6, 9, o.seed + 5)) {
    const int d = pts.dim();
    for (const auto& [cname, body] : container_zoo(d, o.seed, o.tol, true)) {
      guarded(rep, name + " " + cname, "ratios", [&] {
        std::vector<double> r(static_cast<std::size_t>(d + 1));
        for (int k = 1; k <= d; ++k) r[static_cast<std::size_t>(k)] = core_radius(pts, body, k, o.tol).value;
        for (int l = 1; l <= d; ++l) {
          for (int k = l + 1; k <= d; ++k) {
            rep.rows.push_back(make_row(name + " " + cname,
                                        "k=" + std::to_string(k) + " l=" + std::to_string(l),
                                        r[static_cast<std::size_t>(k)] / r[static_cast<std::size_t>(l)],
                                        symm_bound(k, l), Check::kAtMost, o.tol.eq));
          }
        }
      });
    }
  }
}

int meb_coreset_bound(double eps) { return ceil_robust(1.0 / (2.0 * eps + eps * eps)) + 1; }
int linear_coreset_bound(int d, double eps) { return ceil_robust(d / (1.0 + eps)) + 1; }

void exp_coreset_meb(ExperimentReport& rep, const HarnessOptions& o) {
  const std::vector<double> eps_grid{0.1, 0.25, 0.5, 1.0};
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 5, 6, 12, o.seed + 6)) {
    const Container ball = Container::ball(pts.dim());
    for (double eps : eps_grid) {
      guarded(rep, name, kv("eps", eps), [&] {
        rep.rows.push_back(make_row(name, kv("eps", eps),
                                    optimal_coreset_size(pts, ball, eps, o.tol),
                                    meb_coreset_bound(eps), Check::kAtMost, o.tol.eq));
      });
    }
  }
  // Sharpness needs d/(d+1) > (1+eps)^2 k/(k+1) and ceil(1/(2eps+eps^2)) = k+1.
  struct Case {
    int k;
    int d;
    double eps;
  };
  for (const Case& c : {Case{1, 8, 0.3}, Case{2, 12, 0.16}}) {
    if (c.d > o.lp_max_dim) continue;
    const double lhs = c.d / (c.d + 1.0);
    const double rhs = (1.0 + c.eps) * (1.0 + c.eps) * c.k / (c.k + 1.0);
    const std::string param = kv("eps", c.eps) + " " + fmt(lhs) + ">" + fmt(rhs);
    guarded(rep, simplex_name("T ball", c.d), param, [&] {
      const SimplexInstance s = regular_simplex(c.d, o.tol);
      rep.rows.push_back(make_row(simplex_name("T ball", c.d), param,
                                  optimal_coreset_size(s.vertices, Container::ball(c.d), c.eps, o.tol),
                                  meb_coreset_bound(c.eps), Check::kEqual, o.tol.eq));
    });
  }
}

int lemma_cd_coreset_size(int d, double eps) {
  for (int k = 1; k <= d; ++k) {
    if (d <= (1.0 + eps) * lemma_cd_value(d, k) + 1e-9) return k + 1;
  }
  return d + 1;
}

void exp_coreset_linear(ExperimentReport& rep, const HarnessOptions& o) {
  const std::vector<double> eps_grid{0.1, 0.25, 0.5, 1.0};
  for (const auto& [name, pts] : random_corpus(o.random_instances / 2, 2, 4, 6, 9, o.seed + 7)) {
    const int d = pts.dim();
    for (const auto& [cname, body] : container_zoo(d, o.seed + 71, o.tol, false)) {
      for (double eps : eps_grid) {
        guarded(rep, name + " " + cname, kv("eps", eps), [&] {
          rep.rows.push_back(make_row(name + " " + cname, kv("eps", eps),
                                      optimal_coreset_size(pts, body, eps, o.tol),
                                      linear_coreset_bound(d, eps), Check::kAtMost, o.tol.eq));
        });
      }
    }
  }
  for (int d = 3; d <= std::min(6, o.enum_max_dim); ++d) {
    const SimplexInstance s = regular_simplex(d, o.tol);
    const Container neg = neg_simplex(d, o.tol);
    const Container cd = simplex_cap_neg(d, o.tol);
    for (double eps : {0.25, 0.5, 0.9}) {
      guarded(rep, simplex_name("T in -T", d), kv("eps", eps), [&] {
        rep.rows.push_back(make_row(simplex_name("T in -T", d), kv("eps", eps),
                                    optimal_coreset_size(s.vertices, neg, eps, o.tol),
                                    linear_coreset_bound(d, eps), Check::kEqual, o.tol.eq));
      });
      guarded(rep, simplex_name("T in C", d), kv("eps", eps), [&] {
        const int size = optimal_coreset_size(s.vertices, cd, eps, o.tol);
        // The lower bound on C^d needs a diametral pair to fall short,
        // i.e. 2d/(d+1) > 1 + eps; otherwise compare with the exact size.
        const bool sharp = 2.0 * d / (d + 1.0) > 1.0 + eps;
        const std::string param =
            kv("eps", eps) + (sharp ? " bound" : " exact (2d/(d+1) <= 1+eps)");
        rep.rows.push_back(make_row(simplex_name("T in C", d), param, size,
                                    sharp ? linear_coreset_bound(d, eps) : lemma_cd_coreset_size(d, eps),
                                    Check::kEqual, o.tol.eq));
      });
    }
  }
}

void exp_center_conformity(ExperimentReport& rep, const HarnessOptions& o) {
  const std::vector<double> eps_grid{0.1, 0.25, 0.5, 1.0};
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 6, 6, 14, o.seed + 8)) {
    const int d = pts.dim();
    const Container ball = Container::ball(d);
    for (double eps : eps_grid) {
      guarded(rep, name, kv("eps", eps), [&] {
        // Smallest plain eps-core-set from the core-radius witnesses.
        const double full = min_containment(pts, ball, o.tol).rho;
        std::vector<int> subset;
        for (int k = 1; k <= d && subset.empty(); ++k) {
          const CoreRadiusResult core = core_radius(pts, ball, k, o.tol);
          if (full <= (1.0 + eps) * core.value + o.tol.eq_at(full)) subset = core.witness;
        }
        const EnclosingBall meb = exact_meb(pts.subset(subset));
        const double reach =
            (pts.coords().colwise() - meb.center).colwise().norm().maxCoeff() / meb.radius;
        rep.rows.push_back(make_row(name, kv("eps", eps), reach, center_conformity_factor(eps),
                                    Check::kAtMost, o.tol.eq));
      });
    }
  }
  const int d = 3;
  const PointSet box_pts = box_ambiguity_instance(d, 1.0);
  const Container box = standard_container("box", d, o.tol);
  const std::vector<int> pair{2 * d - 2, 2 * d - 1};
  const std::string inst = "box-ambiguity d=3 tau=1";
  guarded(rep, inst, "R(S)", [&] {
    rep.rows.push_back(make_row(inst, "R(S) with S={-e_d,e_d}", subset_radius(box_pts, pair, box, o.tol),
                                1.0, Check::kEqual, o.tol.eq));
    rep.rows.push_back(make_row(inst, "plain 0-core-set",
                                validate_coreset(box_pts, box, pair, 0.0, false, o.tol) ? 1 : 0, 1,
                                Check::kEqual, o.tol.eq));
    rep.rows.push_back(
        make_row(inst, "fixed-center fails eps=0.9",
                 validate_coreset(box_pts, box, pair, 0.9, true, o.tol, CenterMode::kFixed) ? 0 : 1,
                 1, Check::kEqual, o.tol.eq));
    rep.rows.push_back(
        make_row(inst, "center search passes eps=0",
                 validate_coreset(box_pts, box, pair, 0.0, true, o.tol, CenterMode::kSearch) ? 1 : 0,
                 1, Check::kEqual, o.tol.eq));
  });
}

void exp_panigrahy(ExperimentReport& rep, const HarnessOptions& o) {
  for (int d = 2; d <= o.lp_max_dim; ++d) {
    const std::string inst = simplex_name("unit-edge T", d);
    guarded(rep, inst, "distance", [&] {
      // Unit edge length; the bound is stated for that scale.
      const Eigen::MatrixXd x = regular_simplex_vertices(d) / std::sqrt(2.0 * d + 2.0);
      const Container neg = Container::from_vertices(-x, o.tol);
      std::vector<int> first(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) first[static_cast<std::size_t>(i)] = i;
      const PointSet all(x);
      const Solution sol = min_containment(all.subset(first), neg, o.tol);
      const Eigen::MatrixXd body = (-sol.rho * x).colwise() + sol.center;
      const double dist = distance_to_hull(x.col(d), body);
      rep.rows.push_back(make_row(inst, "R(S,-T)", sol.rho, d - 1.0, Check::kEqual, o.tol.eq));
      rep.rows.push_back(make_row(inst, "distance > 1/sqrt2", dist, 1.0 / std::sqrt(2.0),
                                  Check::kAbove, o.tol.eq));
    });
  }
}

void exp_parallelotope(ExperimentReport& rep, const HarnessOptions& o) {
  int i = 0;
  for (const auto& [name, pts] : random_corpus(o.random_instances, 2, 6, 6, 12, o.seed + 9)) {
    const int d = pts.dim();
    const std::vector<NamedContainer> bodies{
        {"box", standard_container("box", d, o.tol)},
        {"parallelotope", random_parallelotope(d, o.seed + 90 + i, o.tol)}};
    for (const auto& [cname, body] : bodies) {
      guarded(rep, name + " " + cname, "R_1", [&] {
        rep.rows.push_back(make_row(name + " " + cname, "R_1 vs R",
                                    core_radius(pts, body, 1, o.tol).value,
                                    min_containment(pts, body, o.tol).rho, Check::kEqual, o.tol.eq));
      });
    }
    ++i;
  }
}

using Runner = void (*)(ExperimentReport&, const HarnessOptions&);

const std::vector<std::pair<std::string, Runner>>& catalog() {
  static const std::vector<std::pair<std::string, Runner>> kCatalog{
      {"asymm", exp_asymm},
      {"core-radii-neg-simplex", exp_core_radii_neg_simplex},
      {"lemma-cd", exp_lemma_cd},
      {"henk", exp_henk},
      {"jung", exp_jung},
      {"bohnenblust", exp_bohnenblust},
      {"identity-radii", exp_identity_radii},
      {"symm-bound", exp_symm_bound},
      {"coreset-meb", exp_coreset_meb},
      {"coreset-linear", exp_coreset_linear},
      {"center-conformity", exp_center_conformity},
      {"panigrahy", exp_panigrahy},
      {"parallelotope", exp_parallelotope},
  };
  return kCatalog;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* to_string(Check check) {
  switch (check) {
    case Check::kEqual: return "eq";
    case Check::kAtMost: return "le";
    case Check::kAtLeast: return "ge";
    case Check::kAbove: return "gt";
  }
  return "?";
}

bool ExperimentReport::passed() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

ReportRow make_row(std::string instance, std::string param, double computed,
                   double reference, Check check, double eq) {
  ReportRow row;
  row.instance = std::move(instance);
  row.param = std::move(param);
  row.computed = computed;
  row.reference = reference;
  row.check = check;
  switch (check) {
    case Check::kEqual:
      row.deviation = std::abs(computed - reference);
      row.pass = row.deviation <= eq;
      break;
    case Check::kAtMost:
      row.deviation = std::max(0.0, computed - reference);
      row.pass = row.deviation <= eq;
      break;
    case Check::kAtLeast:
      row.deviation = std::max(0.0, reference - computed);
      row.pass = row.deviation <= eq;
      break;
    case Check::kAbove:
      row.deviation = std::max(0.0, reference + eq - computed);
      row.pass = computed > reference + eq;
      break;
  }
  if (!std::isfinite(computed)) row.pass = false;
  return row;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : catalog()) ids.push_back(id);
    return ids;
  }();
  return kIds;
}

ExperimentReport run_experiment(const std::string& id, const HarnessOptions& opts) {
  opts.tol.validate();
  const auto& cat = catalog();
  const auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& e) { return e.first == id; });
  if (it == cat.end()) throw Error(ErrorCode::kInvalidArgument, "unknown experiment '" + id + "'");
  ExperimentReport rep;
  rep.id = id;
  const auto start = std::chrono::steady_clock::now();
  it->second(rep, opts);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ExperimentReport> run_all(const HarnessOptions& opts) {
  const auto& ids = experiment_ids();
  std::vector<ExperimentReport> reports(ids.size());
  // Experiments parallelize across threads; inner enumerations stay serial.
  HarnessOptions inner = opts;
  inner.threads = 1;
  const int threads = std::max(
      1, std::min<int>(static_cast<int>(ids.size()),
                       opts.threads > 0 ? opts.threads
                                        : static_cast<int>(std::thread::hardware_concurrency())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(ids.size());
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) {
          try {
            reports[i] = run_experiment(ids[i], inner);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::string to_csv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  out << "experiment,instance,param,computed,reference,deviation,pass\n";
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      std::string param = row.param;
      if (!row.error.empty()) param += " error: " + row.error;
      out << csv_field(rep.id) << ',' << csv_field(row.instance) << ',' << csv_field(param) << ','
          << num(row.computed) << ',' << num(row.reference) << ',' << num(row.deviation) << ','
          << (row.pass ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

Json to_json(const ExperimentReport& report) {
  Json out;
  out["experiment"] = report.id;
  out["pass"] = report.passed();
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["instance"] = row.instance;
    r["param"] = row.param;
    r["computed"] = row.computed;
    r["reference"] = row.reference;
    r["check"] = to_string(row.check);
    r["deviation"] = row.deviation;
    r["pass"] = row.pass;
    if (!row.error.empty()) r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  out["runtime"] = report.runtime_seconds;
  return out;
}

double distance_to_hull(const Eigen::VectorXd& q, const Eigen::MatrixXd& v, double gap_tol,
                        int max_iter) {
  const Eigen::Index m = v.cols();
  require(m >= 1 && v.rows() == q.size(), ErrorCode::kDimensionMismatch,
          "hull generators and query differ in dimension");
  Eigen::Index start = 0;
  (v.colwise() - q).colwise().squaredNorm().minCoeff(&start);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
  w(start) = 1.0;
  Eigen::VectorXd x = v.col(start);
  const double scale = std::max(1.0, (v.colwise() - q).colwise().squaredNorm().maxCoeff());
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd g = x - q;
    const Eigen::VectorXd scores = v.transpose() * g;
    Eigen::Index s = 0;
    scores.minCoeff(&s);
    Eigen::Index a = -1;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (w(j) > 0.0 && (a < 0 || scores(j) > scores(a))) a = j;
    }
    const double gx = g.dot(x);
    const double fw_gap = gx - scores(s);
    if (fw_gap <= gap_tol * scale) break;
    const double away_gap = scores(a) - gx;
    Eigen::VectorXd dir;
    double gamma_max = 1.0;
    const bool forward = fw_gap >= away_gap || w(a) >= 1.0;
    if (forward) {
      dir = v.col(s) - x;
    } else {
      dir = x - v.col(a);
      gamma_max = w(a) / (1.0 - w(a));
    }
    const double dd = dir.squaredNorm();
    if (dd <= 0.0) break;
    const double gamma = std::clamp(-g.dot(dir) / dd, 0.0, gamma_max);
    if (forward) {
      w *= 1.0 - gamma;
      w(s) += gamma;
    } else {
      w *= 1.0 + gamma;
      w(a) -= gamma;
      if (gamma == gamma_max) w(a) = 0.0;
    }
    w = w.cwiseMax(0.0);
    w /= w.sum();
    x = v * w;
  }
  return (x - q).norm();
}

}  // namespace contain
