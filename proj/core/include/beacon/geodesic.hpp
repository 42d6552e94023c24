#pragma once

#include <compare>
#include <vector>

#include "beacon/instance.hpp"
#include "beacon/simulate.hpp"

namespace beacon {

/// A sum of square roots of nonnegative rationals, e.g. a polyline length.
struct RadicalSum {
  std::vector<Scalar> radicands;

  void add(const Scalar& r) { radicands.push_back(r); }
  /// Rational bounds lo <= value <= hi, each root bracketed to within 2^-bits.
  std::pair<Scalar, Scalar> bounds(unsigned bits) const;
  double approx() const;
};

/// Exact order of two radical sums. Intervals are refined until they
/// separate; equality is decided symbolically by grouping rationally
/// dependent roots.
std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b);

/// True if the sums are exactly equal.
bool radical_equal(const RadicalSum& a, const RadicalSum& b);

/// Shortest path from s to t inside the closed polygon over its visibility
/// graph. Throws PointOutsidePolygon.
std::vector<Point> geodesic(const Polygon& poly, const Point& s, const Point& t);

RadicalSum polyline_length(const std::vector<Point>& path);

struct GeodesicCaptureReport {
  bool captured = false;
  std::vector<Point> beacon_path;  // concatenation of the geodesics walked
  int rounds = 0;                  // geodesics planned, one per chase
  RadicalSum length;
  Scalar length_upper;             // rational bound on the walked length
  SessionState final_state;
};

/// Walks the beacon along the geodesic to the ball. If the ball has moved
/// by the time the beacon arrives, plans a new geodesic from there, up to
/// `max_rounds` times. Throws NotFreeMode, CaptureFailed.
GeodesicCaptureReport demo_geodesic_capture(const Instance& inst, const Scalar& step = kDefaultStep,
                                            int max_rounds = 16);

}  // namespace beacon
