#include "beacon/attraction.hpp"

#include "beacon/error.hpp"

namespace beacon {

const char* to_string(RestKind::Kind kind) {
  switch (kind) {
    case RestKind::Kind::AtBeacon: return "AtBeacon";
    case RestKind::Kind::PerpendicularFoot: return "PerpendicularFoot";
    case RestKind::Kind::VertexMinimum: return "VertexMinimum";
  }
  return "Unknown";
}

namespace {

LocalMove rest(RestKind::Kind kind, std::size_t id) {
  return {LocalMove::Kind::Rest, RestKind{kind, id}, std::nullopt, {}};
}

LocalMove pull(const Point& beacon) { return {LocalMove::Kind::FreePull, {}, std::nullopt, beacon}; }

LocalMove slide(std::size_t edge, const Point& toward) {
  return {LocalMove::Kind::Slide, {}, edge, toward};
}

// Direction v lies in the closed tangent cone swept counterclockwise from
// ray r1 (outgoing edge) to ray r2 (reversed incoming edge).
bool in_tangent_cone(const Point& r1, const Point& r2, const Point& v) {
  if (cross(r1, r2).sign() > 0) return cross(r1, v).sign() >= 0 && cross(v, r2).sign() >= 0;
  return !(cross(r2, v).sign() > 0 && cross(v, r1).sign() > 0);
}

}  // namespace

LocalMove local_move(const Polygon& poly, const Point& p, const Point& beacon) {
  if (p == beacon) return rest(RestKind::Kind::AtBeacon, 0);
  const Location loc = locate_point(poly, p);
  if (!loc.in_closed()) throw Error(ErrorCode::BallOutsidePolygon, "ball " + p.str() + " is outside the polygon");
  const Point v = beacon - p;
  if (loc.kind == Location::Kind::Interior) return pull(beacon);

  if (loc.edge) {
    const std::size_t i = *loc.edge;
    const Point e = poly.vertex(i + 1) - poly.vertex(i);
    const Point inward{-e.y, e.x};
    if (dot(v, inward).sign() > 0) return pull(beacon);
    const int along = dot(v, e).sign();
    if (along > 0) return slide(i, poly.vertex(i + 1));
    if (along < 0) return slide(i, poly.vertex(i));
    return rest(RestKind::Kind::PerpendicularFoot, i);
  }

  const std::size_t i = *loc.vertex;
  const Point r1 = poly.vertex(i + 1) - p;
  const Point r2 = poly.vertex(poly.prev(i)) - p;
  if (in_tangent_cone(r1, r2, v)) return pull(beacon);
  const Scalar d1 = dot(v, r1);
  const Scalar d2 = dot(v, r2);
  const bool down1 = d1.sign() > 0;
  const bool down2 = d2.sign() > 0;
  if (!down1 && !down2) return rest(RestKind::Kind::VertexMinimum, i);
  if (down1 && !down2) return slide(i, poly.vertex(i + 1));
  if (down2 && !down1) return slide(poly.prev(i), poly.vertex(poly.prev(i)));
  // Compare the rates of decrease d/|r| without square roots.
  const auto order = (d1 * d1 * sqnorm(r2)) <=> (d2 * d2 * sqnorm(r1));
  if (order > 0) return slide(i, poly.vertex(i + 1));
  if (order < 0) return slide(poly.prev(i), poly.vertex(poly.prev(i)));
  return rest(RestKind::Kind::VertexMinimum, i);
}

Trajectory attract(const Polygon& poly, const Point& ball, const Point& beacon) {
  if (!contains(poly, ball)) {
    throw Error(ErrorCode::BallOutsidePolygon, "ball " + ball.str() + " is outside the polygon");
  }
  Trajectory out;
  Point p = ball;
  const std::size_t limit = 4 * poly.size();
  for (;;) {
    const LocalMove m = local_move(poly, p, beacon);
    if (m.kind == LocalMove::Kind::Rest) {
      out.rest = p;
      out.rest_kind = m.rest;
      return out;
    }
    if (out.events.size() >= limit) {
      throw Error(ErrorCode::ModelViolation, "attraction exceeded " + std::to_string(limit) + " events");
    }
    if (m.kind == LocalMove::Kind::FreePull) {
      Point q = farthest_inside(poly, p, beacon);
      if (q == p) throw Error(ErrorCode::ModelViolation, "free pull from " + p.str() + " made no progress");
      out.events.push_back({TrajectoryEvent::Kind::FreePull, p, q, std::nullopt});
      p = std::move(q);
    } else {
      const Point r = m.target - p;
      const Scalar t = dot(beacon - p, r) / sqnorm(r);
      Point q = t >= Scalar(1) ? m.target : p + t * r;
      out.events.push_back({TrajectoryEvent::Kind::Slide, p, q, m.edge});
      p = std::move(q);
    }
  }
}

RestCheck is_at_rest(const Polygon& poly, const Point& ball, const Point& beacon) {
  const LocalMove m = local_move(poly, ball, beacon);
  RestCheck out;
  if (m.kind == LocalMove::Kind::Rest) {
    out.at_rest = true;
    out.kind = m.rest;
  } else {
    out.descent = m.target - ball;
  }
  return out;
}

}  // namespace beacon
