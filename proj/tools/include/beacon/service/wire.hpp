#pragma once

#include <nlohmann/json.hpp>

#include "beacon/config_space.hpp"
#include "beacon/instance.hpp"
#include "beacon/simulate.hpp"

namespace beacon::wire {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Point& p);
json to_json(const Cell& c);
/// Events in order, closed by a {"kind":"rest"} entry.
json to_json(const Trajectory& t);
json to_json(const Instance& inst);
json to_json(const SessionState& s);
/// Nodes, sorted edges and witnesses; labels when `labels` is given.
json to_json(const ConfigGraph& g, const LabelMap* labels = nullptr);
json to_json(const LabelMap& labels);

Scalar scalar_from(const json& j);
Point point_from(const json& j);
Cell cell_from(const json& j);

}  // namespace beacon::wire
