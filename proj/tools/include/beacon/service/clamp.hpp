#pragma once

#include <vector>

#include "beacon/instance.hpp"

namespace beacon {

struct ClampedMove {
  Point requested;
  Point reached;
  std::vector<Point> waypoints;  // beacon path after the current position, ends at `reached`
  bool clamped = false;          // reached != requested
};

/// Turns a drag request into a path the mode allows.
///
/// BoundaryOnly: the target snaps to its nearest boundary point (lowest edge
/// index on ties) and the beacon walks the shorter way around the boundary.
/// BoundaryAndExterior: the beacon walks straight and stops where the segment
/// first enters the interior. Free: straight, unclamped.
/// Requires `from` to be allowed by the mode.
ClampedMove clamp_move(const Instance& inst, const Point& from, const Point& target);

/// Nearest point of the polygon boundary, with the edge carrying it.
std::pair<Point, std::size_t> nearest_boundary_point(const Polygon& poly, const Point& q);

}  // namespace beacon
