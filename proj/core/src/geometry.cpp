#include "beacon/geometry.hpp"

#include <algorithm>

#include "beacon/error.hpp"

namespace beacon {

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "degenerate segment at " + a.str());
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const int s = cross(b - a, c - a).sign();
  if (s > 0) return Orientation::Counterclockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

std::strong_ordering cmp_sqdist(const Point& a, const Point& b, const Point& c, const Point& d) {
  return sqdist(a, b) <=> sqdist(c, d);
}

bool on_segment(const Segment& s, const Point& q) {
  if (!cross(s.b - s.a, q - s.a).is_zero()) return false;
  return std::min(s.a.x, s.b.x) <= q.x && q.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= q.y && q.y <= std::max(s.a.y, s.b.y);
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const Point d1 = s1.direction();
  const Point d2 = s2.direction();
  const Point w = s2.a - s1.a;
  const Scalar denom = cross(d1, d2);
  SegmentIntersection out;
  if (!denom.is_zero()) {
    const Scalar t = cross(w, d2) / denom;
    const Scalar u = cross(w, d1) / denom;
    if (t.sign() < 0 || t > Scalar(1) || u.sign() < 0 || u > Scalar(1)) return out;
    out.kind = SegmentIntersection::Kind::Point;
    out.point = s1.a + t * d1;
    return out;
  }
  if (!cross(w, d1).is_zero()) return out;  // parallel, distinct lines
  const Scalar len2 = sqnorm(d1);
  const Scalar t0 = dot(w, d1) / len2;
  const Scalar t1 = dot(s2.b - s1.a, d1) / len2;
  const Scalar lo = std::max(Scalar(0), std::min(t0, t1));
  const Scalar hi = std::min(Scalar(1), std::max(t0, t1));
  if (lo > hi) return out;
  if (lo == hi) {
    out.kind = SegmentIntersection::Kind::Point;
    out.point = s1.a + lo * d1;
    return out;
  }
  out.kind = SegmentIntersection::Kind::Overlap;
  out.overlap = Segment(s1.a + lo * d1, s1.a + hi * d1);
  return out;
}

PerpendicularFoot perpendicular_foot(const Segment& s, const Point& q) {
  const Point d = s.direction();
  const Scalar t = dot(q - s.a, d) / sqnorm(d);
  PerpendicularFoot out{PerpendicularFoot::Kind::OnSegment, s.a + t * d};
  if (t.sign() < 0) out.kind = PerpendicularFoot::Kind::BeyondA;
  else if (t > Scalar(1)) out.kind = PerpendicularFoot::Kind::BeyondB;
  return out;
}

Scalar signed_area2(std::span<const Point> vertices) {
  Scalar acc;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    acc += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return acc;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorCode::InvalidPolygon, "repeated consecutive vertex " + vertices_[i].str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]) == Orientation::Collinear) {
      throw Error(ErrorCode::InvalidPolygon, "collinear consecutive vertices at " + vertices_[i].str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei(vertices_[i], vertices_[(i + 1) % n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment ej(vertices_[j], vertices_[(j + 1) % n]);
      const auto hit = segment_intersection(ei, ej);
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (hit.kind == SegmentIntersection::Kind::None) continue;
      if (adjacent && hit.kind == SegmentIntersection::Kind::Point) continue;
      throw Error(ErrorCode::InvalidPolygon,
                  "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect; polygon is not simple");
    }
  }
  const Scalar area2 = signed_area2(vertices_);
  if (area2.sign() < 0) std::reverse(vertices_.begin(), vertices_.end());
}

bool Polygon::grid_orthogonal() const {
  for (std::size_t i = 0; i < size(); ++i) {
    const Point& a = vertex(i);
    const Point& b = vertex(i + 1);
    if (!a.x.is_integer() || !a.y.is_integer()) return false;
    if (a.x != b.x && a.y != b.y) return false;
  }
  return true;
}

bool Polygon::convex_at(std::size_t i) const {
  return orientation(vertex(prev(i)), vertex(i), vertex(i + 1)) == Orientation::Counterclockwise;
}

std::pair<Point, Point> Polygon::bounds() const {
  Point lo = vertices_.front();
  Point hi = vertices_.front();
  for (const auto& v : vertices_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

Location locate_point(const Polygon& poly, const Point& q) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.vertex(i) == q) return {Location::Kind::Boundary, i, std::nullopt};
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    if (on_segment(Segment(a, b), q)) return {Location::Kind::Boundary, std::nullopt, i};
    if ((a.y > q.y) != (b.y > q.y)) {
      const Scalar x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return {inside ? Location::Kind::Interior : Location::Kind::Exterior, std::nullopt, std::nullopt};
}

namespace {

// Sorted distinct parameters along p + t(q - p), t in [0, 1], where the
// segment meets the polygon boundary, including both ends.
std::vector<Scalar> boundary_params(const Polygon& poly, const Point& p, const Point& q) {
  const Segment s(p, q);
  const Point d = q - p;
  const Scalar len2 = sqnorm(d);
  std::vector<Scalar> params{Scalar(0), Scalar(1)};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto hit = segment_intersection(s, poly.edge(i));
    if (hit.kind == SegmentIntersection::Kind::Point) {
      params.push_back(dot(hit.point - p, d) / len2);
    } else if (hit.kind == SegmentIntersection::Kind::Overlap) {
      params.push_back(dot(hit.overlap->a - p, d) / len2);
      params.push_back(dot(hit.overlap->b - p, d) / len2);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

}  // namespace

bool segment_inside(const Polygon& poly, const Point& p, const Point& q) {
  if (p == q) return contains(poly, p);
  if (!contains(poly, p) || !contains(poly, q)) return false;
  return farthest_inside(poly, p, q) == q;
}

Point farthest_inside(const Polygon& poly, const Point& p, const Point& q) {
  if (p == q) return p;
  const Point d = q - p;
  const auto params = boundary_params(poly, p, q);
  // Containment is constant strictly between consecutive boundary hits.
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    const Scalar mid = (params[k] + params[k + 1]) / Scalar(2);
    if (!contains(poly, p + mid * d)) return p + params[k] * d;
  }
  return q;
}

}  // namespace beacon
