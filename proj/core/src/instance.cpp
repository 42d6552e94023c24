#include "beacon/instance.hpp"

#include <map>

#include "beacon/error.hpp"

namespace beacon {

bool beacon_allowed(const Polygon& poly, BeaconMode mode, const Point& q) {
  switch (mode) {
    case BeaconMode::BoundaryOnly: return locate_point(poly, q).kind == Location::Kind::Boundary;
    case BeaconMode::BoundaryAndExterior: return locate_point(poly, q).kind != Location::Kind::Interior;
    case BeaconMode::Free: return true;
  }
  return false;
}

void validate(const Instance& inst) {
  if (!contains(inst.polygon, inst.ball)) {
    throw Error(ErrorCode::PointOutsidePolygon, "ball start " + inst.ball.str() + " is outside the polygon");
  }
  if (!beacon_allowed(inst.polygon, inst.mode, inst.beacon)) {
    throw Error(ErrorCode::PathViolatesMode,
                "beacon start " + inst.beacon.str() + " is not allowed in mode " + to_string(inst.mode));
  }
}

Polygon polygon_from_squares(const std::set<std::pair<long, long>>& squares) {
  if (squares.empty()) throw Error(ErrorCode::InvalidPolygon, "no squares");
  using Corner = std::pair<long, long>;
  std::map<Corner, Corner> next;
  auto filled = [&](long x, long y) { return squares.count({x, y}) != 0; };
  auto link = [&](Corner a, Corner b) {
    if (!next.emplace(a, b).second) {
      throw Error(ErrorCode::InvalidPolygon,
                  "squares touch only at corner (" + std::to_string(a.first) + "," + std::to_string(a.second) + ")");
    }
  };
  // Boundary sides oriented with the interior on the left.
  for (auto [x, y] : squares) {
    if (!filled(x, y - 1)) link({x, y}, {x + 1, y});
    if (!filled(x + 1, y)) link({x + 1, y}, {x + 1, y + 1});
    if (!filled(x, y + 1)) link({x + 1, y + 1}, {x, y + 1});
    if (!filled(x - 1, y)) link({x, y + 1}, {x, y});
  }
  std::vector<Corner> loop;
  const Corner start = next.begin()->first;
  Corner at = start;
  do {
    loop.push_back(at);
    at = next.at(at);
  } while (at != start && loop.size() <= next.size());
  if (loop.size() != next.size()) throw Error(ErrorCode::InvalidPolygon, "squares are disconnected or enclose a hole");
  std::vector<Point> vertices;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Corner& a = loop[(i + n - 1) % n];
    const Corner& b = loop[i];
    const Corner& c = loop[(i + 1) % n];
    const long turn = (b.first - a.first) * (c.second - b.second) - (b.second - a.second) * (c.first - b.first);
    if (turn != 0) vertices.push_back({Scalar(b.first), Scalar(b.second)});
  }
  return Polygon(std::move(vertices));
}

std::set<std::pair<long, long>> squares_from_ascii(const std::vector<std::string>& rows) {
  std::set<std::pair<long, long>> out;
  const long h = static_cast<long>(rows.size());
  for (long r = 0; r < h; ++r) {
    for (long c = 0; c < static_cast<long>(rows[r].size()); ++c) {
      if (rows[r][c] == '#') out.insert({c, h - 1 - r});
    }
  }
  return out;
}

}  // namespace beacon
