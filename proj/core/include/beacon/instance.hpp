#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beacon/geometry.hpp"
#include "beacon/grid.hpp"

namespace beacon {

/// Named sub-regions of an instance, each a list of unit squares given by
/// their lower-left corners (e.g. "core", "hook_left", "pocket_w1").
using Annotations = std::map<std::string, std::vector<std::pair<long, long>>>;

struct Instance {
  std::string name;
  Polygon polygon;
  Point ball;
  Point beacon;
  BeaconMode mode = BeaconMode::BoundaryOnly;
  Annotations annotations;
};

/// Checks the placement rules for the ball and beacon starts. Throws
/// PointOutsidePolygon / PathViolatesMode.
void validate(const Instance& inst);

/// True if the beacon may stand at q under the mode.
bool beacon_allowed(const Polygon& poly, BeaconMode mode, const Point& q);

/// Boundary of a union of unit squares (lower-left corners). The union must
/// be connected, hole-free and without corner-only contacts. Throws
/// InvalidPolygon otherwise.
Polygon polygon_from_squares(const std::set<std::pair<long, long>>& squares);

/// Parses ASCII art where '#' marks a unit square; the last line is row y = 0.
std::set<std::pair<long, long>> squares_from_ascii(const std::vector<std::string>& rows);

}  // namespace beacon
