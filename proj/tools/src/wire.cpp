#include "beacon/service/wire.hpp"

#include "beacon/error.hpp"
#include "beacon/io.hpp"

namespace beacon::wire {

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

json to_json(const Cell& c) {
  json j{{"dim", c.dim}, {"x", c.x}, {"y", c.y}};
  if (c.dim == 1) j["axis"] = c.axis == Axis::Horizontal ? "h" : "v";
  return j;
}

json to_json(const Trajectory& t) {
  json out = json::array();
  for (const auto& e : t.events) {
    json ev{{"kind", e.kind == TrajectoryEvent::Kind::FreePull ? "free_pull" : "slide"},
            {"from", to_json(e.from)},
            {"to", to_json(e.to)}};
    if (e.carrier) ev["carrier"] = *e.carrier;
    out.push_back(std::move(ev));
  }
  json rest{{"kind", "rest"}, {"at", to_json(t.rest)}, {"rest_kind", to_string(t.rest_kind.kind)}};
  if (t.rest_kind.kind != RestKind::Kind::AtBeacon) rest["id"] = t.rest_kind.id;
  out.push_back(std::move(rest));
  return out;
}

json to_json(const Instance& inst) { return json::parse(instance_to_json(inst)); }

json to_json(const SessionState& s) {
  json j{{"instance", s.instance.name},
         {"mode", to_string(s.instance.mode)},
         {"beacon", to_json(s.beacon)},
         {"ball", to_json(s.ball)},
         {"captured", s.captured},
         {"moves", s.log.size()}};
  const auto bc = s.beacon_cell(), lc = s.ball_cell();
  j["beacon_cell"] = bc ? to_json(*bc) : json(nullptr);
  j["ball_cell"] = lc ? to_json(*lc) : json(nullptr);
  return j;
}

json to_json(const LabelMap& labels) {
  json faces = json::object();
  for (const auto& [name, cell] : labels.faces) faces[name] = to_json(cell);
  json balls = json::array();
  for (const auto& [cell, names] : labels.ball_labels) balls.push_back({{"cell", to_json(cell)}, {"labels", names}});
  json zones = json::array();
  for (const auto& [cell, names] : labels.beacon_zones) zones.push_back({{"cell", to_json(cell)}, {"labels", names}});
  return {{"faces", std::move(faces)}, {"ball_cells", std::move(balls)}, {"beacon_zones", std::move(zones)}};
}

json to_json(const ConfigGraph& g, const LabelMap* labels) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    nodes.push_back({{"beacon", to_json(g.nodes[i].beacon)},
                     {"ball", to_json(g.nodes[i].ball)},
                     {"capture", g.nodes[i].capture()},
                     {"witness", {{"beacon", to_json(g.witnesses[i].beacon)}, {"ball", to_json(g.witnesses[i].ball)}}}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.from, e.to}));
  json out{{"mode", to_string(g.mode)}, {"margin", g.margin}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (labels) out["labels"] = to_json(*labels);
  return out;
}

Scalar scalar_from(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational string or an integer, got " + j.dump());
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected [x, y], got " + j.dump());
  return {scalar_from(j[0]), scalar_from(j[1])};
}

Cell cell_from(const json& j) {
  try {
    Cell c{j.at("dim").get<int>(), j.at("x").get<long>(), j.at("y").get<long>(), Axis::Horizontal};
    if (c.dim < 0 || c.dim > 2) throw Error(ErrorCode::ParseError, "cell dim must be 0, 1 or 2");
    if (c.dim == 1) c.axis = j.at("axis").get<std::string>() == "v" ? Axis::Vertical : Axis::Horizontal;
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad cell: ") + e.what());
  }
}

}  // namespace beacon::wire
