#include "beacon/service/clamp.hpp"

#include <algorithm>

#include "beacon/error.hpp"
#include "beacon/geodesic.hpp"

namespace beacon {

namespace {

std::size_t edge_holding(const Polygon& poly, const Point& p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly.vertex(i) == p) return i;
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (on_segment(poly.edge(i), p)) return i;
  }
  throw Error(ErrorCode::PathViolatesMode, "beacon " + p.str() + " is not on the boundary");
}

std::vector<Point> walk(const Polygon& poly, const Point& from, std::size_t i, const Point& to, std::size_t j,
                        bool forward) {
  std::vector<Point> pts{from};
  const Point dir = poly.edge(i).direction();
  const bool ahead = dot(to - from, dir).sign() >= 0;
  if (forward) {
    if (!(i == j && ahead)) {
      std::size_t k = i;
      do {
        k = poly.next(k);
        pts.push_back(poly.vertex(k));
      } while (k != j);
    }
  } else if (!(i == j && !ahead)) {
    pts.push_back(poly.vertex(i));
    for (std::size_t k = i; k != poly.next(j);) {
      k = poly.prev(k);
      pts.push_back(poly.vertex(k));
    }
  }
  pts.push_back(to);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Scalar param_on(const Point& from, const Point& d, const Point& p) { return dot(p - from, d) / sqnorm(d); }

}  // namespace

std::pair<Point, std::size_t> nearest_boundary_point(const Polygon& poly, const Point& q) {
  std::optional<std::pair<Point, std::size_t>> best;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const PerpendicularFoot f = perpendicular_foot(e, q);
    const Point p = f.kind == PerpendicularFoot::Kind::OnSegment ? f.foot
                    : f.kind == PerpendicularFoot::Kind::BeyondA ? e.a
                                                                 : e.b;
    if (!best || sqdist(q, p) < sqdist(q, best->first)) best = {{p, i}};
  }
  return *best;
}

ClampedMove clamp_move(const Instance& inst, const Point& from, const Point& target) {
  const Polygon& poly = inst.polygon;
  if (!beacon_allowed(poly, inst.mode, from)) {
    throw Error(ErrorCode::PathViolatesMode, "beacon " + from.str() + " is not allowed in mode " + to_string(inst.mode));
  }
  ClampedMove out{target, target, {}, false};
  switch (inst.mode) {
    case BeaconMode::Free:
      break;
    case BeaconMode::BoundaryOnly: {
      const auto [to, j] = nearest_boundary_point(poly, target);
      const std::size_t i = edge_holding(poly, from);
      auto fw = walk(poly, from, i, to, j, true);
      auto bw = walk(poly, from, i, to, j, false);
      auto& path = compare(polyline_length(bw), polyline_length(fw)) < 0 ? bw : fw;
      out.reached = to;
      out.waypoints.assign(path.begin() + 1, path.end());
      break;
    }
    case BeaconMode::BoundaryAndExterior: {
      const Point d = target - from;
      if (sqnorm(d).is_zero()) break;
      std::vector<Scalar> ts{Scalar(0), Scalar(1)};
      const Segment s(from, target);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto hit = segment_intersection(s, poly.edge(i));
        if (hit.kind == SegmentIntersection::Kind::Point) {
          ts.push_back(param_on(from, d, hit.point));
        } else if (hit.kind == SegmentIntersection::Kind::Overlap) {
          ts.push_back(param_on(from, d, hit.overlap->a));
          ts.push_back(param_on(from, d, hit.overlap->b));
        }
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        const Point mid = from + ((ts[k] + ts[k + 1]) / Scalar(2)) * d;
        if (locate_point(poly, mid).kind == Location::Kind::Interior) {
          out.reached = from + ts[k] * d;
          break;
        }
      }
      break;
    }
  }
  if (inst.mode != BeaconMode::BoundaryOnly && out.reached != from) out.waypoints = {out.reached};
  out.clamped = out.reached != out.requested;
  return out;
}

}  // namespace beacon
