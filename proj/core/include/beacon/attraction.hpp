#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "beacon/geometry.hpp"

namespace beacon {

struct TrajectoryEvent {
  enum class Kind { FreePull, Slide };
  Kind kind;
  Point from;
  Point to;
  std::optional<std::size_t> carrier;  // edge traversed by a Slide
};

struct RestKind {
  enum class Kind { AtBeacon, PerpendicularFoot, VertexMinimum };
  Kind kind = Kind::AtBeacon;
  std::size_t id = 0;  // edge id for PerpendicularFoot, vertex id for VertexMinimum

  friend bool operator==(const RestKind&, const RestKind&) = default;
};

const char* to_string(RestKind::Kind kind);

struct Trajectory {
  std::vector<TrajectoryEvent> events;
  Point rest;
  RestKind rest_kind;
};

/// The ball's next greedy move from p toward the beacon, or the rest it is in.
struct LocalMove {
  enum class Kind { Rest, FreePull, Slide };
  Kind kind;
  RestKind rest;                      // Kind::Rest
  std::optional<std::size_t> edge;    // Kind::Slide: edge being followed
  Point target;                       // FreePull: the beacon; Slide: the endpoint slid toward
};

/// Classifies the steepest feasible descent at p. Requires p in the closed polygon.
LocalMove local_move(const Polygon& poly, const Point& p, const Point& beacon);

/// Greedy attraction of a ball at `ball` by a fixed beacon. Throws
/// BallOutsidePolygon, or ModelViolation past 4n events.
Trajectory attract(const Polygon& poly, const Point& ball, const Point& beacon);

struct RestCheck {
  bool at_rest = false;
  RestKind kind;       // valid when at_rest
  Point descent;       // a strictly descending feasible direction otherwise
};

RestCheck is_at_rest(const Polygon& poly, const Point& ball, const Point& beacon);

}  // namespace beacon
