#include "beacon/grid.hpp"

#include <algorithm>

#include "beacon/error.hpp"

namespace beacon {

namespace {

const Scalar kHalf(1, 2);

}  // namespace

Point Cell::representative() const {
  switch (dim) {
    case 0: return {Scalar(x), Scalar(y)};
    case 1:
      if (axis == Axis::Horizontal) return {Scalar(x) + kHalf, Scalar(y)};
      return {Scalar(x), Scalar(y) + kHalf};
    default: return {Scalar(x) + kHalf, Scalar(y) + kHalf};
  }
}

bool Cell::closure_contains(const Point& q) const {
  const Scalar x0(x), y0(y), x1(x + 1), y1(y + 1);
  switch (dim) {
    case 0: return q.x == x0 && q.y == y0;
    case 1:
      if (axis == Axis::Horizontal) return q.y == y0 && x0 <= q.x && q.x <= x1;
      return q.x == x0 && y0 <= q.y && q.y <= y1;
    default: return x0 <= q.x && q.x <= x1 && y0 <= q.y && q.y <= y1;
  }
}

Cell Cell::rotated_half_turn(long cx2, long cy2) const {
  // Point (px, py) maps to (cx2 - px, cy2 - py); anchors shift by the extent.
  switch (dim) {
    case 0: return vertex(cx2 - x, cy2 - y);
    case 1:
      if (axis == Axis::Horizontal) return hedge(cx2 - x - 1, cy2 - y);
      return vedge(cx2 - x, cy2 - y - 1);
    default: return face(cx2 - x - 1, cy2 - y - 1);
  }
}

std::string Cell::str() const {
  const std::string anchor = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  switch (dim) {
    case 0: return "C" + anchor;
    case 1: return (axis == Axis::Horizontal ? "H" : "V") + anchor;
    default: return "F" + anchor;
  }
}

Cell cell_of(const Point& q) {
  const bool xi = q.x.is_integer();
  const bool yi = q.y.is_integer();
  const long fx = q.x.floor();
  const long fy = q.y.floor();
  if (xi && yi) return Cell::vertex(fx, fy);
  if (xi) return Cell::vedge(fx, fy);
  if (yi) return Cell::hedge(fx, fy);
  return Cell::face(fx, fy);
}

std::vector<Cell> incident_cells(const Cell& c) {
  const long x = c.x;
  const long y = c.y;
  switch (c.dim) {
    case 0:
      return {Cell::hedge(x, y), Cell::hedge(x - 1, y), Cell::vedge(x, y), Cell::vedge(x, y - 1),
              Cell::face(x, y), Cell::face(x - 1, y), Cell::face(x, y - 1), Cell::face(x - 1, y - 1)};
    case 1:
      if (c.axis == Axis::Horizontal) {
        return {Cell::vertex(x, y), Cell::vertex(x + 1, y), Cell::face(x, y), Cell::face(x, y - 1)};
      }
      return {Cell::vertex(x, y), Cell::vertex(x, y + 1), Cell::face(x, y), Cell::face(x - 1, y)};
    default:
      return {Cell::hedge(x, y), Cell::hedge(x, y + 1), Cell::vedge(x, y), Cell::vedge(x + 1, y),
              Cell::vertex(x, y), Cell::vertex(x + 1, y), Cell::vertex(x, y + 1), Cell::vertex(x + 1, y + 1)};
  }
}

bool incident(const Cell& a, const Cell& b) {
  if (a.dim == b.dim) return false;
  const auto around = incident_cells(a);
  return std::find(around.begin(), around.end(), b) != around.end();
}

const char* to_string(BeaconMode mode) {
  switch (mode) {
    case BeaconMode::BoundaryOnly: return "boundary";
    case BeaconMode::BoundaryAndExterior: return "boundary+exterior";
    case BeaconMode::Free: return "free";
  }
  return "unknown";
}

CellSpace ball_space(const Polygon& poly) {
  if (!poly.grid_orthogonal()) throw Error(ErrorCode::NotGridOrthogonal, "polygon is not grid-orthogonal");
  CellSpace out;
  out.kind = CellSpace::Kind::Ball;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    const long ax = a.x.floor(), ay = a.y.floor(), bx = b.x.floor(), by = b.y.floor();
    if (ay == by) {
      for (long x = std::min(ax, bx); x <= std::max(ax, bx); ++x) {
        out.cells.insert(Cell::vertex(x, ay));
        if (x < std::max(ax, bx)) out.cells.insert(Cell::hedge(x, ay));
      }
    } else {
      for (long y = std::min(ay, by); y <= std::max(ay, by); ++y) {
        out.cells.insert(Cell::vertex(ax, y));
        if (y < std::max(ay, by)) out.cells.insert(Cell::vedge(ax, y));
      }
    }
  }
  return out;
}

CellSpace beacon_space(const Polygon& poly, BeaconMode mode, long margin) {
  if (margin < 1) throw Error(ErrorCode::InvalidArgument, "margin must be at least 1");
  CellSpace out = ball_space(poly);
  out.kind = CellSpace::Kind::Beacon;
  out.mode = mode;
  if (mode == BeaconMode::BoundaryOnly) return out;
  const auto [lo, hi] = poly.bounds();
  const long x0 = lo.x.floor() - margin, y0 = lo.y.floor() - margin;
  const long x1 = hi.x.floor() + margin, y1 = hi.y.floor() + margin;
  auto consider = [&](const Cell& c) {
    const auto kind = locate_point(poly, c.representative()).kind;
    if (mode == BeaconMode::Free || kind != Location::Kind::Interior) out.cells.insert(c);
  };
  for (long x = x0; x <= x1; ++x) {
    for (long y = y0; y <= y1; ++y) {
      consider(Cell::vertex(x, y));
      if (x < x1) consider(Cell::hedge(x, y));
      if (y < y1) consider(Cell::vedge(x, y));
      if (x < x1 && y < y1) consider(Cell::face(x, y));
    }
  }
  return out;
}

}  // namespace beacon
