#include <random>

#include <gtest/gtest.h>

#include "beacon/attraction.hpp"
#include "beacon/error.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace beacon {
namespace {

using testing::attract_oracle;
using testing::to_vec;

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }
Point Q(long xn, long xd, long yn, long yd) { return {Scalar(xn, xd), Scalar(yn, yd)}; }

Polygon square4() { return Polygon({P(0, 0), P(4, 0), P(4, 4), P(0, 4)}); }
Polygon l_shape() { return builtin_l_shape().polygon; }

// Checks the trajectory invariants shared by every attract() result.
void expect_well_formed(const Polygon& poly, const Point& ball, const Point& beacon, const Trajectory& t) {
  Point at = ball;
  Scalar last = sqdist(ball, beacon);
  for (const auto& e : t.events) {
    EXPECT_EQ(e.from, at);
    EXPECT_LT(sqdist(e.to, beacon), last) << "distance must strictly drop";
    if (e.kind == TrajectoryEvent::Kind::Slide) {
      ASSERT_TRUE(e.carrier.has_value());
      EXPECT_TRUE(on_segment(poly.edge(*e.carrier), e.from));
      EXPECT_TRUE(on_segment(poly.edge(*e.carrier), e.to));
    } else {
      EXPECT_EQ(orientation(e.from, e.to, beacon), Orientation::Collinear);
      EXPECT_TRUE(segment_inside(poly, e.from, e.to));
    }
    last = sqdist(e.to, beacon);
    at = e.to;
  }
  EXPECT_EQ(t.rest, at);
  EXPECT_LE(t.events.size(), 4 * poly.size());
  const RestCheck rc = is_at_rest(poly, t.rest, beacon);
  EXPECT_TRUE(rc.at_rest);
  EXPECT_EQ(rc.kind, t.rest_kind);
  if (t.rest_kind.kind == RestKind::Kind::PerpendicularFoot) {
    EXPECT_TRUE(dot(t.rest - beacon, poly.edge(t.rest_kind.id).direction()).is_zero());
  }
  if (t.rest_kind.kind == RestKind::Kind::AtBeacon) EXPECT_EQ(t.rest, beacon);
}

TEST(Attract, ConvexMutuallyVisible) {
  const Trajectory t = attract(square4(), P(1, 1), P(3, 3));
  ASSERT_EQ(t.events.size(), 1u);
  EXPECT_EQ(t.events[0].kind, TrajectoryEvent::Kind::FreePull);
  EXPECT_EQ(t.rest, P(3, 3));
  EXPECT_EQ(t.rest_kind.kind, RestKind::Kind::AtBeacon);
}

TEST(Attract, LShapeSlidesPastReflexVertex) {
  const Polygon l = l_shape();
  const Point beacon = Q(7, 2, 4, 1);
  const Trajectory t = attract(l, P(0, 1), beacon);
  ASSERT_EQ(t.events.size(), 2u);
  EXPECT_EQ(t.events[0].kind, TrajectoryEvent::Kind::Slide);
  EXPECT_EQ(t.events[0].to, P(3, 1));
  EXPECT_EQ(t.events[1].kind, TrajectoryEvent::Kind::FreePull);
  EXPECT_EQ(t.rest, beacon);
  EXPECT_EQ(t.rest_kind.kind, RestKind::Kind::AtBeacon);
  expect_well_formed(l, P(0, 1), beacon, t);
}

TEST(Attract, PullSlidePullSlideToRightAngle) {
  const Polygon p({P(0, 0), P(10, 0), P(10, 2), P(4, 2), P(4, 6), P(0, 6)});
  const Point ball = P(3, 5), beacon = P(8, -3);
  const Trajectory t = attract(p, ball, beacon);
  int pulls = 0, slides = 0;
  for (const auto& e : t.events) (e.kind == TrajectoryEvent::Kind::FreePull ? pulls : slides)++;
  EXPECT_GE(pulls, 2);
  EXPECT_GE(slides, 1);
  EXPECT_EQ(t.rest_kind.kind, RestKind::Kind::PerpendicularFoot);
  EXPECT_EQ(t.rest, P(8, 0));
  expect_well_formed(p, ball, beacon, t);
}

TEST(Attract, BallOutsideIsRejected) {
  EXPECT_THROW(attract(square4(), P(5, 5), P(1, 1)), Error);
  try {
    attract(square4(), P(5, 5), P(1, 1));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BallOutsidePolygon);
  }
}

TEST(Attract, Deterministic) {
  const Polygon l = l_shape();
  const Trajectory a = attract(l, P(0, 1), Q(7, 2, 4, 1));
  const Trajectory b = attract(l, P(0, 1), Q(7, 2, 4, 1));
  ASSERT_EQ(a.events.size(), b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    EXPECT_EQ(a.events[i].from, b.events[i].from);
    EXPECT_EQ(a.events[i].to, b.events[i].to);
  }
  EXPECT_EQ(a.rest, b.rest);
  EXPECT_EQ(a.rest_kind, b.rest_kind);
}

TEST(IsAtRest, Examples) {
  const Polygon sq = square4();
  const RestCheck coincide = is_at_rest(sq, P(2, 2), P(2, 2));
  EXPECT_TRUE(coincide.at_rest);
  EXPECT_EQ(coincide.kind.kind, RestKind::Kind::AtBeacon);

  const RestCheck foot = is_at_rest(sq, P(2, 0), P(2, -5));
  EXPECT_TRUE(foot.at_rest);
  EXPECT_EQ(foot.kind.kind, RestKind::Kind::PerpendicularFoot);
  EXPECT_EQ(sq.edge(foot.kind.id), Segment(P(0, 0), P(4, 0)));

  const RestCheck slide = is_at_rest(sq, P(2, 0), P(3, -5));
  EXPECT_FALSE(slide.at_rest);
  EXPECT_GT(slide.descent.x.sign(), 0);
  EXPECT_TRUE(slide.descent.y.is_zero());
}

TEST(IsAtRest, InteriorRestsOnlyAtBeacon) {
  EXPECT_FALSE(is_at_rest(square4(), P(1, 1), P(3, 3)).at_rest);
  EXPECT_FALSE(is_at_rest(square4(), P(1, 1), P(9, 9)).at_rest);
}

TEST(IsAtRest, ConvexCornerMinimumForExteriorBeacon) {
  const RestCheck rc = is_at_rest(square4(), P(4, 4), P(6, 7));
  EXPECT_TRUE(rc.at_rest);
  EXPECT_EQ(rc.kind.kind, RestKind::Kind::VertexMinimum);
}

TEST(Oracle, ConvexAndLShapeTrajectories) {
  const double step = 1.0 / 64;
  struct Case {
    Polygon poly;
    Point ball, beacon;
  };
  for (const Case& c : {Case{square4(), P(1, 1), P(3, 3)}, Case{l_shape(), P(0, 1), Q(7, 2, 4, 1)}}) {
    const Trajectory t = attract(c.poly, c.ball, c.beacon);
    std::vector<testing::Vec> exact{to_vec(c.ball)};
    for (const auto& e : t.events) exact.push_back(to_vec(e.to));
    const auto approx = attract_oracle(c.poly, c.ball, c.beacon, step);
    EXPECT_LE(testing::directed_hausdorff(approx, exact), 2 * step);
    EXPECT_LE(testing::directed_hausdorff(exact, approx), 2 * step);
    EXPECT_LE(testing::distance(approx.back(), to_vec(t.rest)), 2 * step);
  }
}

// A vertex rest where both incident edges descend equally fast. The exact
// model stops there; a greedy descent breaks the tie either way.
bool tied_vertex_rest(const Polygon& poly, const Point& beacon, const Trajectory& t) {
  if (t.rest_kind.kind != RestKind::Kind::VertexMinimum) return false;
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size(), i = t.rest_kind.id;
  const Point v = vs[i], d1 = vs[(i + n - 1) % n] - v, d2 = vs[(i + 1) % n] - v, g = beacon - v;
  const Scalar a = dot(d1, g), b = dot(d2, g);
  return a > 0 && b > 0 && a * a * sqnorm(d2) == b * b * sqnorm(d1);
}

// Random grid polygons with beacons at vertices, inside and outside.
TEST(Oracle, RestPointsAgreeOnRandomOrthogonalPolygons) {
  const double step = 1.0 / 64;
  std::mt19937_64 rng(2024);
  int compared = 0, ties = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = random_orthogonal_instance(8, seed);
    std::vector<Point> beacons{inst.beacon};
    for (int k = 0; k < 3; ++k) beacons.push_back(testing::random_point(rng, -2, 10, 3));
    for (const Point& b : beacons) {
      const Trajectory t = attract(inst.polygon, inst.ball, b);
      expect_well_formed(inst.polygon, inst.ball, b, t);
      if (tied_vertex_rest(inst.polygon, b, t)) {
        ++ties;
        continue;
      }
      const auto approx = attract_oracle(inst.polygon, inst.ball, b, step);
      EXPECT_LE(testing::distance(approx.back(), to_vec(t.rest)), 2 * step)
          << inst.name << " beacon " << b.str() << " exact rest " << t.rest.str();
      ++compared;
    }
  }
  EXPECT_GE(compared, 100);
  EXPECT_LT(ties, compared / 20);
}

TEST(Attract, InvariantsOnRandomStarPolygons) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const Polygon p = testing::random_star_polygon(rng, 10);
    const Point ball{Scalar(0), Scalar(0)};  // the kernel contains the origin
    for (int k = 0; k < 5; ++k) {
      const Point b = testing::random_point(rng, -14, 14, 5);
      expect_well_formed(p, ball, b, attract(p, ball, b));
    }
  }
}

}  // namespace
}  // namespace beacon
