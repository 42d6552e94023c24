#pragma once

#include <cstdint>
#include <random>

#include "beacon/geometry.hpp"

namespace beacon::testing {

/// Random rational in [lo, hi] with the given denominator.
inline Scalar random_scalar(std::mt19937_64& rng, long lo, long hi, long den) {
  return Scalar(std::uniform_int_distribution<long>(lo * den, hi * den)(rng), den);
}

inline Point random_point(std::mt19937_64& rng, long lo, long hi, long den) {
  return {random_scalar(rng, lo, hi, den), random_scalar(rng, lo, hi, den)};
}

/// Star-shaped polygon around the origin: n vertices at increasing angles
/// with random integer radii, rounded to a 1/den lattice. Retries until the
/// result is a valid simple polygon.
Polygon random_star_polygon(std::mt19937_64& rng, int n, long den = 16);

}  // namespace beacon::testing
