#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "beacon/attraction.hpp"
#include "beacon/error.hpp"
#include "beacon/grid.hpp"
#include "beacon/perturb.hpp"
#include "support/random.hpp"

namespace beacon {
namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }
Polygon rect(long w, long h) { return Polygon({P(0, 0), P(w, 0), P(w, h), P(0, h)}); }

TEST(CellOf, Examples) {
  EXPECT_EQ(cell_of(P(3, 5)), Cell::vertex(3, 5));
  EXPECT_EQ(cell_of({Scalar(3), Scalar(11, 2)}), Cell::vedge(3, 5));
  EXPECT_EQ(cell_of({Scalar(11, 2), Scalar(3)}), Cell::hedge(5, 3));
  EXPECT_EQ(cell_of({Scalar(7, 2), Scalar(11, 2)}), Cell::face(3, 5));
  EXPECT_EQ(cell_of({Scalar(-1, 3), Scalar(-7, 2)}), Cell::face(-1, -4));
}

TEST(CellOf, PartitionsThePlane) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Point q = testing::random_point(rng, -4, 4, 2);
    const Cell c = cell_of(q);
    EXPECT_TRUE(c.closure_contains(q));
    // No other cell nearby holds q in its open interior: incident cells of
    // lower dimension contain q only in their closure if c is their coface.
    for (const Cell& n : incident_cells(c)) {
      if (n.dim < c.dim) EXPECT_NE(cell_of(q), n);
    }
  }
}

TEST(IncidentCells, Examples) {
  auto sorted = [](std::vector<Cell> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(incident_cells(Cell::face(0, 0))),
            sorted({Cell::hedge(0, 0), Cell::hedge(0, 1), Cell::vedge(0, 0), Cell::vedge(1, 0), Cell::vertex(0, 0),
                    Cell::vertex(1, 0), Cell::vertex(0, 1), Cell::vertex(1, 1)}));
  EXPECT_EQ(sorted(incident_cells(Cell::vertex(0, 0))),
            sorted({Cell::hedge(0, 0), Cell::hedge(-1, 0), Cell::vedge(0, 0), Cell::vedge(0, -1), Cell::face(0, 0),
                    Cell::face(-1, 0), Cell::face(0, -1), Cell::face(-1, -1)}));
  EXPECT_EQ(sorted(incident_cells(Cell::hedge(0, 0))),
            sorted({Cell::vertex(0, 0), Cell::vertex(1, 0), Cell::face(0, 0), Cell::face(0, -1)}));
}

TEST(IncidentCells, Symmetric) {
  for (long x = -2; x <= 2; ++x) {
    for (long y = -2; y <= 2; ++y) {
      for (const Cell& c : {Cell::vertex(x, y), Cell::hedge(x, y), Cell::vedge(x, y), Cell::face(x, y)}) {
        for (const Cell& n : incident_cells(c)) {
          const auto back = incident_cells(n);
          EXPECT_NE(std::find(back.begin(), back.end(), c), back.end()) << c.str() << " " << n.str();
          EXPECT_TRUE(incident(c, n));
        }
      }
    }
  }
}

TEST(BallSpace, Examples) {
  const CellSpace unit = ball_space(rect(1, 1));
  EXPECT_EQ(unit.size(), 8u);
  EXPECT_EQ(std::count_if(unit.cells.begin(), unit.cells.end(), [](const Cell& c) { return c.dim == 0; }), 4);
  const CellSpace two = ball_space(rect(2, 1));
  EXPECT_EQ(std::count_if(two.cells.begin(), two.cells.end(), [](const Cell& c) { return c.dim == 0; }), 6);
  EXPECT_EQ(std::count_if(two.cells.begin(), two.cells.end(), [](const Cell& c) { return c.dim == 1; }), 6);
}

TEST(BallSpace, RejectsNonOrthogonal) {
  const Polygon tri({P(0, 0), P(2, 0), P(0, 2)});
  EXPECT_THROW(ball_space(tri), Error);
  try {
    ball_space(tri);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGridOrthogonal);
  }
}

TEST(BallSpace, EveryBoundaryPointFallsInIt) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_orthogonal_instance(7, seed);
    const CellSpace space = ball_space(inst.polygon);
    for (std::size_t i = 0; i < inst.polygon.size(); ++i) {
      const Segment e = inst.polygon.edge(i);
      for (int k = 0; k <= 8; ++k) {
        const Point q = e.a + Scalar(k, 8) * e.direction();
        EXPECT_TRUE(space.contains(cell_of(q))) << q.str();
      }
    }
  }
}

TEST(BeaconSpace, Examples) {
  const Polygon unit = rect(1, 1);
  EXPECT_EQ(beacon_space(unit, BeaconMode::BoundaryOnly).size(), 8u);
  const CellSpace ext = beacon_space(unit, BeaconMode::BoundaryAndExterior, 1);
  // 3x3 box: 9 faces, 24 edges, 16 vertices, minus the open unit square.
  EXPECT_EQ(ext.size(), 8u + 24 + 16);
  EXPECT_FALSE(ext.contains(Cell::face(0, 0)));
  EXPECT_TRUE(ext.contains(Cell::face(-1, -1)));
  EXPECT_FALSE(ext.contains(Cell::face(-2, -2)));
}

TEST(BeaconSpace, MarginGrowsTheExterior) {
  const Polygon unit = rect(1, 1);
  const auto m2 = beacon_space(unit, BeaconMode::BoundaryAndExterior, 2);
  const auto m4 = beacon_space(unit, BeaconMode::BoundaryAndExterior, 4);
  EXPECT_LT(m2.size(), m4.size());
  for (const Cell& c : m2.cells) EXPECT_TRUE(m4.contains(c));
}

// A beacon wandering inside one cell keeps the ball inside the closure of one ball cell.
TEST(CellConfinement, RandomPathsWithinOneBeaconCell) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = random_orthogonal_instance(7, seed);
    const CellSpace beacons = beacon_space(inst.polygon, BeaconMode::BoundaryAndExterior, 2);
    std::vector<Cell> cells(beacons.cells.begin(), beacons.cells.end());
    for (int trial = 0; trial < 10; ++trial) {
      const Cell c = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
      auto sample = [&]() {
        const Point r = c.representative();
        auto jitter = [&]() { return Scalar(std::uniform_int_distribution<long>(-15, 15)(rng), 32); };
        if (c.dim == 0) return r;
        if (c.dim == 2) return Point{r.x + jitter(), r.y + jitter()};
        return c.axis == Axis::Horizontal ? Point{r.x + jitter(), r.y} : Point{r.x, r.y + jitter()};
      };
      Point ball = attract(inst.polygon, inst.ball, sample()).rest;
      std::vector<Point> rests{ball};
      for (int k = 0; k < 12; ++k) {
        ball = attract(inst.polygon, ball, sample()).rest;
        rests.push_back(ball);
      }
      bool confined = false;
      for (const Point& r : rests) {
        const Cell home = cell_of(r);
        confined = confined || std::all_of(rests.begin(), rests.end(),
                                           [&](const Point& q) { return home.closure_contains(q); });
      }
      EXPECT_TRUE(confined) << inst.name << " beacon cell " << c.str();
    }
  }
}

TEST(Cell, HalfTurnIsAnInvolution) {
  for (const Cell& c : {Cell::vertex(1, 2), Cell::hedge(3, 4), Cell::vedge(-1, 5), Cell::face(2, 2)}) {
    const Cell r = c.rotated_half_turn(10, 12);
    EXPECT_EQ(r.dim, c.dim);
    EXPECT_EQ(r.rotated_half_turn(10, 12), c);
  }
  EXPECT_EQ(Cell::face(0, 0).rotated_half_turn(4, 4), Cell::face(3, 3));
  EXPECT_EQ(Cell::hedge(0, 0).rotated_half_turn(4, 4), Cell::hedge(3, 4));
}

}  // namespace
}  // namespace beacon
