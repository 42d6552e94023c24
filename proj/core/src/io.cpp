#include "beacon/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "beacon/error.hpp"

namespace beacon {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

Scalar scalar_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
  bad(where, "expected a rational string or an integer");
}

Point point_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [x, y]");
  return {scalar_at(j[0], where + "[0]"), scalar_at(j[1], where + "[1]")};
}

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

}  // namespace

BeaconMode parse_mode(std::string_view text) {
  if (text == "boundary") return BeaconMode::BoundaryOnly;
  if (text == "boundary+exterior") return BeaconMode::BoundaryAndExterior;
  if (text == "free") return BeaconMode::Free;
  throw Error(ErrorCode::ParseError, "unknown beacon mode \"" + std::string(text) + "\"");
}

Instance instance_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) bad("$", "expected an object");
  for (const char* key : {"polygon", "ball", "beacon"}) {
    if (!doc.contains(key)) bad("$", std::string("missing \"") + key + "\"");
  }
  const json& poly = doc["polygon"];
  if (!poly.is_array()) bad("$.polygon", "expected an array of points");
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    vertices.push_back(point_at(poly[i], "$.polygon[" + std::to_string(i) + "]"));
  }
  Instance inst{doc.value("name", std::string("unnamed")), Polygon(std::move(vertices)),
                point_at(doc["ball"], "$.ball"), point_at(doc["beacon"], "$.beacon"), BeaconMode::BoundaryOnly, {}};
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) bad("$.mode", "expected a string");
    try {
      inst.mode = parse_mode(doc["mode"].get<std::string>());
    } catch (const Error& e) {
      bad("$.mode", e.what());
    }
  }
  if (doc.contains("annotations")) {
    const json& ann = doc["annotations"];
    if (!ann.is_object()) bad("$.annotations", "expected an object");
    for (const auto& [name, squares] : ann.items()) {
      const std::string where = "$.annotations." + name;
      if (!squares.is_array()) bad(where, "expected an array of [x, y] squares");
      auto& list = inst.annotations[name];
      for (const auto& sq : squares) {
        if (!sq.is_array() || sq.size() != 2 || !sq[0].is_number_integer() || !sq[1].is_number_integer()) {
          bad(where, "expected integer [x, y] squares");
        }
        list.emplace_back(sq[0].get<long>(), sq[1].get<long>());
      }
    }
  }
  validate(inst);
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  // nlohmann::json objects keep keys sorted, which makes the output canonical.
  json doc;
  doc["name"] = inst.name;
  doc["mode"] = to_string(inst.mode);
  doc["ball"] = point_json(inst.ball);
  doc["beacon"] = point_json(inst.beacon);
  json poly = json::array();
  for (const auto& v : inst.polygon.vertices()) poly.push_back(point_json(v));
  doc["polygon"] = std::move(poly);
  if (!inst.annotations.empty()) {
    json ann = json::object();
    for (const auto& [name, squares] : inst.annotations) {
      json list = json::array();
      for (const auto& [x, y] : squares) list.push_back(json::array({x, y}));
      ann[name] = std::move(list);
    }
    doc["annotations"] = std::move(ann);
  }
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out << instance_to_json(inst);
}

}  // namespace beacon
