#pragma once

#include <json.hpp>

#include "contain/containment.hpp"
#include "contain/coresets.hpp"
#include "contain/instances.hpp"

namespace contain {

using Json = nlohmann::ordered_json;

// Points:    {"dim": d, "points": [[x_1, ..., x_d], ...]}
// Container: {"dim": d, "kind": "hpoly"|"vpoly"|"dual"|"ball",
//             "normals": [[...], ...], "vertices": [[...], ...]}
//            normals describe {x : a . x <= 1}.
// Instance:  {"dim": d, "points": [...], "container": {...}}   (container optional)
//
// Malformed documents raise Error(kInvalidArgument).
Json to_json(const PointSet& points);
Json to_json(const Container& c);
Json to_json(const Instance& inst);
Json to_json(const Solution& sol);
Json to_json(const Certificate& cert);
Json to_json(const NotOptimal& fail);
Json to_json(const CoreSet& cs);

PointSet points_from_json(const Json& j);
Container container_from_json(const Json& j, const Tolerance& tol = {});
Instance instance_from_json(const Json& j, const Tolerance& tol = {});

}  // namespace contain
