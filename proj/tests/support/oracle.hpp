#pragma once

#include <vector>

#include "beacon/geometry.hpp"

namespace beacon::testing {

struct Vec {
  double x = 0, y = 0;
};

/// Small-step greedy descent in double precision, written independently of
/// attract(): each iteration moves the ball at most `step` in the feasible
/// direction that decreases its distance to the beacon fastest. Returns the
/// visited points, the last one being the rest.
std::vector<Vec> attract_oracle(const Polygon& poly, const Point& ball, const Point& beacon, double step);

double distance(const Vec& a, const Vec& b);

/// Largest distance from a point of `a` to the polyline `b`.
double directed_hausdorff(const std::vector<Vec>& a, const std::vector<Vec>& b);

Vec to_vec(const Point& p);

}  // namespace beacon::testing
