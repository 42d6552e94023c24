#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "beacon/geometry.hpp"

namespace beacon {

enum class Axis : std::uint8_t { Horizontal, Vertical };

/// A cell of the unit-grid complex: a grid corner (dim 0), an open unit edge
/// (dim 1) or an open unit square (dim 2). The anchor is the corner, the
/// lower/left endpoint, or the lower-left corner respectively.
struct Cell {
  int dim = 0;
  long x = 0;
  long y = 0;
  Axis axis = Axis::Horizontal;  // meaningful for dim 1 only

  static Cell vertex(long x, long y) { return {0, x, y, Axis::Horizontal}; }
  static Cell hedge(long x, long y) { return {1, x, y, Axis::Horizontal}; }
  static Cell vedge(long x, long y) { return {1, x, y, Axis::Vertical}; }
  static Cell face(long x, long y) { return {2, x, y, Axis::Horizontal}; }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) {
    return std::tie(a.x, a.y, a.dim, a.axis) <=> std::tie(b.x, b.y, b.dim, b.axis);
  }

  /// Midpoint of the cell: the corner, edge midpoint, or square center.
  Point representative() const;
  /// True if q lies in the closure of the cell.
  bool closure_contains(const Point& q) const;
  /// Cell after a 180 degree rotation about the point (cx/2, cy/2).
  Cell rotated_half_turn(long cx2, long cy2) const;
  std::string str() const;
};

/// The unique grid cell containing q.
Cell cell_of(const Point& q);

/// Cells lying on the boundary of c, or having c on their boundary.
std::vector<Cell> incident_cells(const Cell& c);

bool incident(const Cell& a, const Cell& b);

enum class BeaconMode { BoundaryOnly, BoundaryAndExterior, Free };

const char* to_string(BeaconMode mode);

struct CellSpace {
  enum class Kind { Ball, Beacon };
  Kind kind = Kind::Ball;
  BeaconMode mode = BeaconMode::BoundaryOnly;  // Beacon spaces only
  std::set<Cell> cells;

  bool contains(const Cell& c) const { return cells.count(c) != 0; }
  std::size_t size() const { return cells.size(); }
};

/// Corners and unit edges of the grid contained in the polygon boundary.
/// Throws NotGridOrthogonal.
CellSpace ball_space(const Polygon& poly);

/// Beacon cells: the boundary cells, plus (BoundaryAndExterior) every cell
/// disjoint from the interior inside the bounding box grown by `margin`.
CellSpace beacon_space(const Polygon& poly, BeaconMode mode, long margin = 2);

}  // namespace beacon

template <>
struct std::hash<beacon::Cell> {
  std::size_t operator()(const beacon::Cell& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::size_t>(c.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(c.dim * 2 + static_cast<int>(c.axis));
  }
};
