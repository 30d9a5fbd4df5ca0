#include "contain/io.hpp"

#include <cmath>
#include <string>

namespace contain {
namespace {

Json vector_json(const Eigen::Ref<const Eigen::VectorXd>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json columns_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(vector_json(m.col(j)));
  return out;
}

Json index_json(const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i);
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "malformed input: " + what);
}

int read_dim(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    malformed("missing integer field 'dim'");
  }
  const int d = j["dim"].get<int>();
  if (d < 1) malformed("'dim' must be >= 1");
  return d;
}

Eigen::MatrixXd read_columns(const Json& j, const char* field, int d) {
  if (!j.contains(field) || !j[field].is_array()) {
    malformed(std::string("field '") + field + "' must be an array of points");
  }
  const Json& arr = j[field];
  Eigen::MatrixXd out(d, static_cast<Eigen::Index>(arr.size()));
  for (std::size_t c = 0; c < arr.size(); ++c) {
    const Json& row = arr[c];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      malformed(std::string("entry ") + std::to_string(c) + " of '" + field +
                "' must have " + std::to_string(d) + " coordinates");
    }
    for (int i = 0; i < d; ++i) {
      if (!row[static_cast<std::size_t>(i)].is_number()) {
        malformed(std::string("non-numeric coordinate in '") + field + "'");
      }
      const double v = row[static_cast<std::size_t>(i)].get<double>();
      if (!std::isfinite(v)) malformed(std::string("non-finite coordinate in '") + field + "'");
      out(i, static_cast<Eigen::Index>(c)) = v;
    }
  }
  return out;
}

}  // namespace

Json to_json(const PointSet& points) {
  Json out;
  out["dim"] = points.dim();
  out["points"] = columns_json(points.coords());
  return out;
}

Json to_json(const Container& c) {
  Json out;
  out["dim"] = c.dim();
  out["kind"] = to_string(c.kind());
  if (c.has_normals()) out["normals"] = columns_json(c.normals());
  if (c.has_vertices()) out["vertices"] = columns_json(c.vertices());
  return out;
}

Json to_json(const Instance& inst) {
  Json out = to_json(inst.points);
  if (inst.container) out["container"] = to_json(*inst.container);
  return out;
}

Json to_json(const Solution& sol) {
  Json out;
  out["rho"] = sol.rho;
  out["center"] = vector_json(sol.center);
  out["active_points"] = index_json(sol.active_points);
  out["active_normals"] = index_json(sol.active_normals);
  out["duals"] = vector_json(sol.duals);
  return out;
}

Json to_json(const Certificate& cert) {
  Json out;
  out["status"] = "OPTIMAL";
  out["rho"] = cert.rho;
  out["center"] = vector_json(cert.center);
  out["touch_indices"] = index_json(cert.touch_indices);
  Json normals = Json::array();
  for (const auto& a : cert.normals) normals.push_back(vector_json(a));
  out["normals"] = std::move(normals);
  out["lambda"] = vector_json(cert.lambda);
  return out;
}

Json to_json(const NotOptimal& fail) {
  Json out;
  out["status"] = "NOT_OPTIMAL";
  out["reason"] = fail.reason == NotOptimal::Reason::kCenterImprovable ? "center_improvable"
                                                                       : "radius_not_tight";
  out["infeasible"] = fail.infeasible;
  out["attained_radius"] = fail.attained_radius;
  out["direction"] = vector_json(fail.direction);
  return out;
}

Json to_json(const CoreSet& cs) {
  Json out;
  out["size"] = cs.indices.size();
  out["indices"] = index_json(cs.indices);
  out["radius"] = cs.radius;
  out["center"] = vector_json(cs.center);
  out["eps_achieved"] = cs.eps_achieved;
  out["center_conform"] = cs.center_conform;
  return out;
}

PointSet points_from_json(const Json& j) {
  const int d = read_dim(j);
  Eigen::MatrixXd pts = read_columns(j, "points", d);
  if (pts.cols() == 0) malformed("'points' is empty");
  return PointSet(std::move(pts));
}

Container container_from_json(const Json& j, const Tolerance& tol) {
  const int d = read_dim(j);
  if (!j.contains("kind") || !j["kind"].is_string()) malformed("missing string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "ball") return Container::ball(d);
  if (kind == "hpoly") return Container::from_normals(read_columns(j, "normals", d), tol);
  if (kind == "vpoly") return Container::from_vertices(read_columns(j, "vertices", d), tol);
  if (kind == "dual") {
    return Container::dual(read_columns(j, "normals", d), read_columns(j, "vertices", d), tol);
  }
  malformed("unknown container kind '" + kind + "'");
}

Instance instance_from_json(const Json& j, const Tolerance& tol) {
  Instance inst{points_from_json(j), std::nullopt};
  if (j.contains("container")) {
    inst.container = container_from_json(j["container"], tol);
    if (inst.container->dim() != inst.points.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "container and points differ in dimension");
    }
  }
  return inst;
}

}  // namespace contain
