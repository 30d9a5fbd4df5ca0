#include "contain/radii.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "contain/containment.hpp"

namespace contain {
namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > (std::int64_t{1} << 52)) return out;
  }
  return out;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int r = static_cast<int>(comb.size());
  int i = r - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - r + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

// Evaluates R(S, C) for a block of subsets, fanned out over threads.
void evaluate_block(const PointSet& points, const Container& c, const Tolerance& tol,
                    const std::vector<std::vector<int>>& block,
                    std::vector<double>& values, int threads) {
  values.assign(block.size(), 0.0);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < block.size(); i += stride) {
      values[i] = subset_radius(points, block[i], c, tol);
    }
  };
  if (threads <= 1 || block.size() < 64) {
    work(0, 1);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<int> all_indices(int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

double point_scale(const PointSet& points) {
  return std::max(1.0, points.coords().cwiseAbs().maxCoeff());
}

}  // namespace

std::vector<int> reduce_to_minimal(const PointSet& points, std::vector<int> indices,
                                   const Container& c, double target,
                                   const Tolerance& tol) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const double slack = tol.eq_at(target);
  std::size_t pos = 0;
  while (pos < indices.size() && indices.size() > 1) {
    std::vector<int> trial = indices;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (subset_radius(points, trial, c, tol) >= target - slack) {
      indices = std::move(trial);
    } else {
      ++pos;
    }
  }
  return indices;
}

CoreRadiusResult core_radius(const PointSet& points, const Container& c, int k,
                             const Tolerance& tol, const EnumerationOptions& opts) {
  tol.validate();
  require(points.dim() == c.dim(), ErrorCode::kDimensionMismatch,
          "point set and container differ in dimension");
  require(k >= 1, ErrorCode::kInvalidArgument, "core radius index k must be >= 1");
  const int n = points.size();
  const int d = points.dim();

  const Solution full = min_containment(points, c, tol);
  CoreRadiusResult out;
  out.k = k;
  if (k >= d || n <= k + 1) {
    out.value = full.rho;
    std::vector<int> seed = full.active_points.empty() ? all_indices(n) : full.active_points;
    if (subset_radius(points, seed, c, tol) < full.rho - tol.eq_at(full.rho)) {
      seed = all_indices(n);
    }
    out.witness = reduce_to_minimal(points, seed, c, full.rho, tol);
    return out;
  }

  const int r = k + 1;
  const std::int64_t total = binomial(n, r);
  if (total > opts.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "core radius enumeration needs " + std::to_string(total) +
                    " subset solves, budget is " + std::to_string(opts.budget));
  }
  const int threads = opts.threads > 0
                          ? opts.threads
                          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  const double ceiling = full.rho - tol.eq_at(full.rho);

  std::vector<int> comb(static_cast<std::size_t>(r));
  std::iota(comb.begin(), comb.end(), 0);
  double best = -1.0;
  std::vector<std::vector<int>> best_candidates;  // in lexicographic order
  std::vector<double> best_values;
  bool more = true;
  const std::size_t block_size = 4096;
  std::vector<std::vector<int>> block;
  std::vector<double> values;
  while (more) {
    block.clear();
    while (more && block.size() < block_size) {
      block.push_back(comb);
      more = next_combination(comb, n);
    }
    evaluate_block(points, c, tol, block, values, threads);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (values[i] > best) best = values[i];
      best_candidates.push_back(block[i]);
      best_values.push_back(values[i]);
    }
    // Keep only candidates that may still tie with the maximum.
    std::vector<std::vector<int>> keep;
    std::vector<double> keep_values;
    for (std::size_t i = 0; i < best_candidates.size(); ++i) {
      if (best_values[i] >= best - tol.eq_at(best)) {
        keep.push_back(std::move(best_candidates[i]));
        keep_values.push_back(best_values[i]);
      }
    }
    best_candidates = std::move(keep);
    best_values = std::move(keep_values);
    if (best >= ceiling) break;
  }

  out.value = best;
  std::size_t pick = 0;
  for (std::size_t i = 0; i < best_candidates.size(); ++i) {
    if (best_values[i] >= best - tol.eq_at(best)) {
      pick = i;
      break;
    }
  }
  out.witness = reduce_to_minimal(points, best_candidates[pick], c, best, tol);
  return out;
}

double minkowski_asymmetry(const Container& c, const Tolerance& tol) {
  if (c.is_ball()) return 1.0;
  const PointSet reflected(-c.vertices());
  return min_containment(reflected, c, tol).rho;
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns, double drop_tol) {
  Eigen::MatrixXd work = columns;
  const auto d = columns.rows();
  std::vector<Eigen::VectorXd> basis;
  std::vector<bool> used(static_cast<std::size_t>(columns.cols()), false);
  for (;;) {
    Eigen::Index pick = -1;
    double best = drop_tol;
    for (Eigen::Index j = 0; j < work.cols(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double nrm = work.col(j).norm();
      if (nrm > best) {
        best = nrm;
        pick = j;
      }
    }
    if (pick < 0 || static_cast<Eigen::Index>(basis.size()) == d) break;
    used[static_cast<std::size_t>(pick)] = true;
    Eigen::VectorXd q = work.col(pick) / best;
    for (const auto& b : basis) q -= b.dot(q) * b;  // second pass
    q.normalize();
    basis.push_back(q);
    for (Eigen::Index j = 0; j < work.cols(); ++j) {
      if (!used[static_cast<std::size_t>(j)]) work.col(j) -= q.dot(work.col(j)) * q;
    }
  }
  Eigen::MatrixXd out(d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis[j];
  return out;
}

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& columns, int d,
                                      double drop_tol) {
  const Eigen::MatrixXd q = columns.cols() > 0 ? orthonormal_basis(columns, drop_tol)
                                               : Eigen::MatrixXd(d, 0);
  Eigen::MatrixXd candidates = Eigen::MatrixXd::Identity(d, d);
  candidates -= q * (q.transpose() * candidates);
  Eigen::MatrixXd comp = orthonormal_basis(candidates, 1e-8);
  // Re-orthogonalize against q once more for rounding.
  comp -= q * (q.transpose() * comp);
  for (Eigen::Index j = 0; j < comp.cols(); ++j) comp.col(j).normalize();
  return comp.leftCols(std::min<Eigen::Index>(comp.cols(), d - q.cols()));
}

double intersection_radius_check(const PointSet& points, const Container& c, int k,
                                 const Tolerance& tol,
                                 const std::optional<CoreRadiusResult>& core) {
  const CoreRadiusResult res = core ? *core : core_radius(points, c, k, tol);
  const std::vector<int>& w = res.witness;
  require(!w.empty(), ErrorCode::kInvalidArgument, "core radius witness is empty");
  const int d = points.dim();
  const Eigen::VectorXd origin = points.point(w.front());
  Eigen::MatrixXd dirs(d, static_cast<Eigen::Index>(w.size()) - 1);
  for (std::size_t j = 1; j < w.size(); ++j) {
    dirs.col(static_cast<Eigen::Index>(j) - 1) = points.point(w[j]) - origin;
  }
  const Eigen::MatrixXd q = dirs.cols() > 0 ? orthonormal_basis(dirs, tol.pivot)
                                            : Eigen::MatrixXd(d, 0);
  const double slack = tol.feas * point_scale(points);
  std::vector<int> in_plane;
  for (int i = 0; i < points.size(); ++i) {
    const Eigen::VectorXd rel = points.point(i) - origin;
    const Eigen::VectorXd off = rel - q * (q.transpose() * rel);
    if (off.norm() <= slack) in_plane.push_back(i);
  }
  return subset_radius(points, in_plane, c, tol);
}

double cylinder_radius_check(const PointSet& points, const Container& c, int k,
                             const Tolerance& tol,
                             const std::optional<CoreRadiusResult>& core) {
  const int d = points.dim();
  require(c.is_ball() || c.has_vertices(), ErrorCode::kMissingRepresentation,
          "cylinder radius needs a ball or a V-representation");
  if (k >= d) return min_containment(points, c, tol).rho;

  const CoreRadiusResult res = core ? *core : core_radius(points, c, k, tol);
  const PointSet witness = points.subset(res.witness);
  const Solution sol = min_containment(witness, c, tol);
  if (sol.rho <= tol.feas) return 0.0;
  const CertificateResult cert_or = make_certificate(witness, c, sol, tol);
  const auto* cert = std::get_if<Certificate>(&cert_or);
  require(cert != nullptr, ErrorCode::kNumericalFailure,
          "optimal witness containment produced no certificate");

  Eigen::MatrixXd normals(d, static_cast<Eigen::Index>(cert->normals.size()));
  for (std::size_t j = 0; j < cert->normals.size(); ++j) {
    normals.col(static_cast<Eigen::Index>(j)) = cert->normals[j];
  }
  const Eigen::MatrixXd null_space = orthogonal_complement(normals, d, 1e-8);
  require(null_space.cols() >= d - k, ErrorCode::kNumericalFailure,
          "certificate normals leave a null space thinner than d - k");
  const Eigen::MatrixXd f = null_space.leftCols(d - k);
  // Orthonormal basis of F's orthogonal complement: the k-dimensional space
  // the problem projects onto.
  const Eigen::MatrixXd q = orthogonal_complement(f, d, 1e-8);
  require(q.cols() == k, ErrorCode::kNumericalFailure,
          "projection space has the wrong dimension");

  const PointSet projected(q.transpose() * points.coords());
  const Container shadow = c.is_ball() ? Container::ball(k)
                                       : Container::from_vertices(q.transpose() * c.vertices(), tol);
  return min_containment(projected, shadow, tol).rho;
}

}  // namespace contain
