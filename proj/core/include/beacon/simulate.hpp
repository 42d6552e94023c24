#pragma once

#include <optional>
#include <vector>

#include "beacon/attraction.hpp"
#include "beacon/instance.hpp"

namespace beacon {

/// Default quasi-static increment, in grid units.
inline const Scalar kDefaultStep(1, 16);

struct MoveRecord {
  Point beacon;           // beacon position after the increment
  Trajectory trajectory;  // ball response from its previous rest
};

/// Live state of one quasi-static run. The ball is always at rest for the
/// current beacon position; `captured` holds exactly when they coincide.
struct SessionState {
  Instance instance;
  Point beacon;
  Point ball;
  bool captured = false;
  std::vector<MoveRecord> log;

  /// Starts a session: the ball is attracted to rest for the starting beacon.
  static SessionState start(const Instance& inst);

  std::optional<Cell> beacon_cell() const;
  std::optional<Cell> ball_cell() const;
};

struct BeaconPath {
  std::vector<Point> waypoints;  // the beacon walks from its current position through each in turn
};

/// Advances the beacon along the path in increments no longer than `step`,
/// re-attracting the ball after each. Stops early on capture. Throws
/// PathViolatesMode if an increment leaves the region allowed by the
/// instance's mode, InvalidArgument if step <= 0.
void advance(SessionState& state, const BeaconPath& path, const Scalar& step = kDefaultStep);

/// Batch form: a fresh session from the instance's starts, advanced along the path.
SessionState simulate_beacon_path(const Instance& inst, const BeaconPath& path, const Scalar& step = kDefaultStep);

/// Number of equal increments needed so each is at most `step` long.
long increments_for(const Point& from, const Point& to, const Scalar& step);

}  // namespace beacon
