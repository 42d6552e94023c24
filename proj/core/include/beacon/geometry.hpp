#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beacon/scalar.hpp"

namespace beacon {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar sqnorm(const Point& a) { return dot(a, a); }
inline Scalar sqdist(const Point& a, const Point& b) { return sqnorm(b - a); }

struct Segment {
  Point a;
  Point b;

  Segment(Point a_, Point b_);
  Point direction() const { return b - a; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Orientation { Clockwise, Counterclockwise, Collinear };

/// Sign of (b - a) x (c - a).
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Exact comparison of |ab|^2 against |cd|^2.
std::strong_ordering cmp_sqdist(const Point& a, const Point& b, const Point& c, const Point& d);

/// True when q lies on the closed segment s.
bool on_segment(const Segment& s, const Point& q);

struct SegmentIntersection {
  enum class Kind { None, Point, Overlap };
  Kind kind = Kind::None;
  Point point;                    // valid for Kind::Point
  std::optional<Segment> overlap; // valid for Kind::Overlap
};

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

struct PerpendicularFoot {
  enum class Kind { OnSegment, BeyondA, BeyondB };
  Kind kind;
  Point foot;  // projection onto the supporting line, whatever the kind
};

PerpendicularFoot perpendicular_foot(const Segment& s, const Point& q);

/// Simple counterclockwise polygon without holes. Construction validates and
/// normalizes clockwise input to counterclockwise order.
class Polygon {
public:
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge i runs from vertex i to vertex i+1.
  Segment edge(std::size_t i) const { return Segment(vertex(i), vertex(i + 1)); }
  std::size_t next(std::size_t i) const { return (i + 1) % vertices_.size(); }
  std::size_t prev(std::size_t i) const { return (i + vertices_.size() - 1) % vertices_.size(); }

  /// True if every vertex is integral and every edge axis-parallel.
  bool grid_orthogonal() const;
  /// Vertex i is convex (interior angle below 180 degrees).
  bool convex_at(std::size_t i) const;

  /// Axis-aligned bounding box as (min, max).
  std::pair<Point, Point> bounds() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

private:
  std::vector<Point> vertices_;
};

/// Twice the signed area (positive for counterclockwise order).
Scalar signed_area2(std::span<const Point> vertices);

struct Location {
  enum class Kind { Interior, Boundary, Exterior };
  Kind kind = Kind::Exterior;
  std::optional<std::size_t> vertex;  // Boundary at a polygon vertex
  std::optional<std::size_t> edge;    // Boundary in the relative interior of an edge

  bool in_closed() const { return kind != Kind::Exterior; }
};

Location locate_point(const Polygon& poly, const Point& q);

/// Nonstrict containment: boundary points count as inside.
inline bool contains(const Polygon& poly, const Point& q) { return locate_point(poly, q).in_closed(); }

/// True if the closed segment pq lies inside the closed polygon.
bool segment_inside(const Polygon& poly, const Point& p, const Point& q);

/// Farthest point r on segment pq such that the closed segment pr stays
/// inside the closed polygon. Requires p inside.
Point farthest_inside(const Polygon& poly, const Point& p, const Point& q);

}  // namespace beacon
