#include <random>

#include <gtest/gtest.h>

#include "beacon/error.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"
#include "beacon/simulate.hpp"
#include "support/random.hpp"

namespace beacon {
namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }

// Walks the boundary from the beacon's starting vertex for `steps` vertices,
// in either direction.
BeaconPath boundary_walk(const Instance& inst, std::mt19937_64& rng, int steps) {
  const auto& vs = inst.polygon.vertices();
  const long n = static_cast<long>(vs.size());
  long i = 0;
  while (vs[i] != inst.beacon) ++i;
  BeaconPath path;
  for (int k = 0; k < steps; ++k) {
    i = (i + (rng() % 2 ? 1 : n - 1)) % n;
    path.waypoints.push_back(vs[i]);
  }
  return path;
}

TEST(Session, StartAttractsTheBall) {
  const auto s = SessionState::start(builtin_l_shape());
  EXPECT_EQ(s.ball, P(4, 4));
  EXPECT_TRUE(s.captured);
  ASSERT_EQ(s.log.size(), 1u);  // the start attraction
  EXPECT_EQ(s.log[0].beacon, P(4, 4));
  EXPECT_EQ(s.ball_cell(), Cell::vertex(4, 4));
}

TEST(Simulate, IncrementCounts) {
  EXPECT_EQ(increments_for(P(0, 0), P(1, 0), Scalar(1, 16)), 16);
  EXPECT_EQ(increments_for(P(0, 0), P(3, 4), Scalar(1)), 5);
  EXPECT_EQ(increments_for(P(0, 0), P(1, 1), Scalar(1)), 2);
  EXPECT_EQ(increments_for(P(2, 2), P(2, 2), Scalar(1)), 0);
}

TEST(Simulate, BallTracksAnExteriorBeacon) {
  const Instance inst{"t",
                      Polygon({P(0, 0), P(10, 0), P(10, 2), P(4, 2), P(4, 6), P(0, 6)}),
                      P(3, 5),
                      P(8, -3),
                      BeaconMode::BoundaryAndExterior,
                      {}};
  auto s = SessionState::start(inst);
  EXPECT_EQ(s.ball, P(8, 0));
  EXPECT_FALSE(s.captured);
  advance(s, {{P(8, -1), P(6, -1)}}, Scalar(1, 2));
  EXPECT_EQ(s.log.size(), 1u + 8);
  EXPECT_EQ(s.beacon, P(6, -1));
  EXPECT_EQ(s.ball, P(6, 0));
  EXPECT_EQ(s.ball_cell(), Cell::vertex(6, 0));
  EXPECT_FALSE(s.captured);
  advance(s, {{P(6, 0)}});
  EXPECT_TRUE(s.captured);
}

TEST(Simulate, Errors) {
  const Instance inst{"t", Polygon({P(0, 0), P(10, 0), P(10, 2), P(0, 2)}), P(3, 1), P(8, -3),
                      BeaconMode::BoundaryAndExterior, {}};
  auto s = SessionState::start(inst);
  try {
    advance(s, {{P(8, 1)}}, Scalar(8));  // one increment, straight into the interior
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathViolatesMode);
  }
  EXPECT_TRUE(beacon_allowed(inst.polygon, inst.mode, s.beacon));
  try {
    advance(s, {{P(4, -1)}}, Scalar(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  // A captured session ignores further moves.
  auto c = SessionState::start(builtin_square());
  ASSERT_TRUE(c.captured);
  advance(c, {{P(4, 0)}});
  EXPECT_EQ(c.beacon, P(0, 0));
  EXPECT_EQ(c.log.size(), 1u);
}

TEST(Simulate, LogRecordsEveryIncrement) {
  Instance inst = random_orthogonal_instance(6, 5);
  std::mt19937_64 rng(5);
  const BeaconPath path = boundary_walk(inst, rng, 6);
  const auto s = simulate_beacon_path(inst, path, Scalar(1, 4));
  Point at = inst.beacon;
  long expected = 1;
  for (const Point& w : path.waypoints) {
    expected += increments_for(at, w, Scalar(1, 4));
    at = w;
  }
  if (!s.captured) EXPECT_EQ(static_cast<long>(s.log.size()), expected);
  if (!s.log.empty()) {
    EXPECT_EQ(s.log.back().beacon, s.beacon);
    EXPECT_EQ(s.log.back().trajectory.rest, s.ball);
  }
}

TEST(Simulate, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = random_orthogonal_instance(6, seed);
    std::mt19937_64 rng(seed);
    const BeaconPath path = boundary_walk(inst, rng, 8);
    const auto a = simulate_beacon_path(inst, path), b = simulate_beacon_path(inst, path);
    ASSERT_EQ(a.log.size(), b.log.size());
    for (std::size_t i = 0; i < a.log.size(); ++i) {
      EXPECT_EQ(a.log[i].beacon, b.log[i].beacon);
      EXPECT_EQ(a.log[i].trajectory.rest, b.log[i].trajectory.rest);
    }
  }
}

// Halving the increment keeps the outcome: same capture status and final
// rests within two increments of each other.
TEST(Simulate, StepRefinementIsStable) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_orthogonal_instance(6, seed);
    std::mt19937_64 rng(seed * 7);
    const BeaconPath path = boundary_walk(inst, rng, 10);
    const Scalar step(1, 8);
    const auto coarse = simulate_beacon_path(inst, path, step);
    const auto fine = simulate_beacon_path(inst, path, step / 2);
    EXPECT_EQ(coarse.captured, fine.captured) << inst.name;
    if (!coarse.captured && !fine.captured) {
      EXPECT_LE(sqdist(coarse.ball, fine.ball), 4 * step * step) << inst.name;
    }
  }
}

}  // namespace
}  // namespace beacon
