#include "beacon/perturb.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "beacon/error.hpp"
#include "beacon/simulate.hpp"

namespace beacon {

namespace {

bool near_horizontal(const Point& d) { return !d.x.is_zero() && Scalar(10) * abs(d.y) <= abs(d.x); }
bool near_vertical(const Point& d) { return !d.y.is_zero() && Scalar(10) * abs(d.x) <= abs(d.y); }

std::vector<ExtensionClass> group(std::map<Scalar, std::vector<std::size_t>>&& by_coord) {
  std::vector<ExtensionClass> out;
  for (auto& [c, edges] : by_coord) out.push_back({c, std::move(edges)});
  return out;
}

// Class index of every edge on one axis.
std::map<std::size_t, std::size_t> rank_of(const std::vector<ExtensionClass>& classes) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto e : classes[k].edges) out[e] = k;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_violation(const std::vector<ExtensionClass>& before,
                                                                   const std::vector<ExtensionClass>& after) {
  const auto rb = rank_of(before), ra = rank_of(after);
  for (const auto& [i, ri] : rb) {
    for (const auto& [j, rj] : rb) {
      if (ri < rj && !(ra.at(i) < ra.at(j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point r = b - a, s = d - c;
  const Scalar denom = cross(r, s);
  if (denom.is_zero()) throw Error(ErrorCode::MissingCorrespondence, "parallel extension lines");
  return a + (cross(c - a, s) / denom) * r;
}

}  // namespace

ExtensionOrder extension_orders(const Polygon& poly) {
  const auto [lo, hi] = poly.bounds();
  const Scalar xm = (lo.x + hi.x) / Scalar(2), ym = (lo.y + hi.y) / Scalar(2);
  std::map<Scalar, std::vector<std::size_t>> hor, ver;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const Point d = e.direction();
    if (near_horizontal(d)) {
      hor[e.a.y + (xm - e.a.x) * d.y / d.x].push_back(i);
    } else if (near_vertical(d)) {
      ver[e.a.x + (ym - e.a.y) * d.x / d.y].push_back(i);
    } else {
      throw Error(ErrorCode::NotNearOrthogonal, "edge " + std::to_string(i) + " is not within 0.1 rad of an axis");
    }
  }
  return {group(std::move(hor)), group(std::move(ver))};
}

OrderCheck check_order_preserved(const ExtensionOrder& before, const ExtensionOrder& after) {
  auto keys = [](const std::vector<ExtensionClass>& cs) {
    std::set<std::size_t> out;
    for (const auto& c : cs) out.insert(c.edges.begin(), c.edges.end());
    return out;
  };
  if (keys(before.horizontal) != keys(after.horizontal) || keys(before.vertical) != keys(after.vertical)) {
    throw Error(ErrorCode::EdgeSetMismatch, "the orders cover different edge sets");
  }
  if (auto v = first_violation(before.horizontal, after.horizontal)) return {false, Axis::Horizontal, v};
  if (auto v = first_violation(before.vertical, after.vertical)) return {false, Axis::Vertical, v};
  return {};
}

Scalar max_edge_slope(const Polygon& poly) {
  Scalar worst(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point d = poly.edge(i).direction();
    const Scalar ax = abs(d.x), ay = abs(d.y);
    worst = std::max(worst, ax >= ay ? ay / ax : ax / ay);
  }
  return worst;
}

Polygon perturb(const Polygon& poly, const Scalar& eps, std::uint64_t seed, long denominator, int max_rounds) {
  if (eps.sign() < 0) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  if (eps.is_zero()) return poly;
  if (!poly.grid_orthogonal()) throw Error(ErrorCode::NotGridOrthogonal, "perturb needs a grid-orthogonal polygon");
  const long reach = (eps * Scalar(denominator) / Scalar(2)).floor();
  if (reach < 1) throw Error(ErrorCode::PerturbationFailed, "eps is below the offset lattice");

  std::mt19937_64 rng(seed);
  auto draw = [&] {
    return Scalar(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * reach + 1)) - reach, denominator);
  };
  const std::size_t n = poly.size();
  std::vector<Point> offset(n);
  for (auto& o : offset) o = {draw(), draw()};
  const ExtensionOrder before = extension_orders(poly);

  for (int round = 0; round < max_rounds; ++round) {
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = poly.vertex(i) + offset[i];
    std::set<std::size_t> bad;
    std::vector<Point> dir(n);
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = v[(i + 1) % n] - v[i];
      const Scalar ax = abs(dir[i].x), ay = abs(dir[i].y);
      if ((ax >= ay ? ay : ax) > eps * (ax >= ay ? ax : ay)) bad.insert({i, (i + 1) % n});
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (cross(dir[i], dir[j]).is_zero()) bad.insert({j, (j + 1) % n});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          if (orientation(v[i], v[j], v[k]) == Orientation::Collinear) bad.insert(k);
        }
      }
    }
    if (bad.empty()) {
      try {
        Polygon out(v);
        const OrderCheck check = check_order_preserved(before, extension_orders(out));
        if (check.preserved) return out;
        for (auto e : {check.pair->first, check.pair->second}) bad.insert({e, (e + 1) % n});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidPolygon && e.code() != ErrorCode::NotNearOrthogonal) throw;
        for (std::size_t i = 0; i < n; ++i) bad.insert(i);
      }
    }
    for (auto i : bad) offset[i] = {draw(), draw()};
  }
  throw Error(ErrorCode::PerturbationFailed,
              "no admissible perturbation after " + std::to_string(max_rounds) + " resampling rounds");
}

std::vector<std::vector<LabelBoundary>> boundaries_along_edges(const Polygon& original, const Polygon& perturbed) {
  if (!original.grid_orthogonal()) throw Error(ErrorCode::NotGridOrthogonal, "original polygon must be grid-orthogonal");
  if (original.size() != perturbed.size()) throw Error(ErrorCode::EdgeSetMismatch, "vertex counts differ");
  const std::size_t n = original.size();
  std::vector<std::vector<LabelBoundary>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Segment e = original.edge(i);
    const Point d = e.direction();
    const bool horizontal = d.y.is_zero();
    const long len = (horizontal ? abs(d.x) : abs(d.y)).floor();
    const Point unit = Scalar(1, len) * d;
    const Point pa = perturbed.vertex(i), pb = perturbed.vertex(i + 1);
    out[i].push_back({i, e.a, original.prev(i), pa});
    for (long k = 1; k < len; ++k) {
      const Point g = e.a + Scalar(k) * unit;
      // The nearest edge lying on the perpendicular grid line through g.
      std::optional<std::size_t> best;
      Scalar best_gap;
      for (std::size_t f = 0; f < n; ++f) {
        const Segment s = original.edge(f);
        if (horizontal ? !(s.a.x == g.x && s.b.x == g.x) : !(s.a.y == g.y && s.b.y == g.y)) continue;
        const Scalar c = horizontal ? g.y : g.x;
        const Scalar lo = std::min(horizontal ? s.a.y : s.a.x, horizontal ? s.b.y : s.b.x);
        const Scalar hi = std::max(horizontal ? s.a.y : s.a.x, horizontal ? s.b.y : s.b.x);
        const Scalar gap = c < lo ? lo - c : (c > hi ? c - hi : Scalar(0));
        if (!best || gap < best_gap) {
          best = f;
          best_gap = gap;
        }
      }
      const Point p = best ? line_intersection(pa, pb, perturbed.vertex(*best), perturbed.vertex(*best + 1))
                           : pa + Scalar(k, len) * (pb - pa);
      out[i].push_back({i, g, best, p});
    }
    out[i].push_back({i, e.b, original.next(i), pb});
  }
  return out;
}

std::vector<LabelBoundary> perturbed_label_boundaries(const Polygon& perturbed, const Instance& original,
                                                      const std::set<Cell>* ball_cells) {
  const auto all = boundaries_along_edges(original.polygon, perturbed);
  std::vector<LabelBoundary> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Segment e = original.polygon.edge(i);
    if (ball_cells) {
      const bool touched = std::any_of(ball_cells->begin(), ball_cells->end(),
                                       [&](const Cell& c) { return on_segment(e, c.representative()); });
      if (!touched) continue;
    }
    for (std::size_t k = 1; k + 1 < all[i].size(); ++k) {
      const LabelBoundary& b = all[i][k];
      if (!b.defining) {
        throw Error(ErrorCode::MissingCorrespondence,
                    "no polygon edge extends through the boundary at " + b.grid_point.str());
      }
      out.push_back(b);
    }
  }
  return out;
}

namespace {

// Piecewise-linear correspondence between the two boundaries, anchored at
// the label boundaries of every edge. Points off the boundary map to themselves.
class BoundaryMap {
public:
  BoundaryMap(const Polygon& original, const Polygon& perturbed)
      : original_(original), perturbed_(perturbed), b_(boundaries_along_edges(original, perturbed)) {}

  Point forward(const Point& q) const {
    const Location loc = locate_point(original_, q);
    if (loc.vertex) return perturbed_.vertex(*loc.vertex);
    if (!loc.edge) return q;
    const auto& bs = b_[*loc.edge];
    const Segment e = original_.edge(*loc.edge);
    const Scalar s = param(e.a, e.b, q);
    for (std::size_t k = 0; k + 1 < bs.size(); ++k) {
      const Scalar s0 = param(e.a, e.b, bs[k].grid_point), s1 = param(e.a, e.b, bs[k + 1].grid_point);
      if (s0 <= s && s <= s1) {
        const Scalar t = (s - s0) / (s1 - s0);
        return bs[k].perturbed_point + t * (bs[k + 1].perturbed_point - bs[k].perturbed_point);
      }
    }
    return q;
  }

  Point back(const Point& q) const {
    const Location loc = locate_point(perturbed_, q);
    if (loc.vertex) return original_.vertex(*loc.vertex);
    if (!loc.edge) return q;
    const auto& bs = b_[*loc.edge];
    const Point a = perturbed_.vertex(*loc.edge), b = perturbed_.vertex(*loc.edge + 1);
    const Scalar s = param(a, b, q);
    for (std::size_t k = 0; k + 1 < bs.size(); ++k) {
      const Scalar s0 = param(a, b, bs[k].perturbed_point), s1 = param(a, b, bs[k + 1].perturbed_point);
      if (s0 <= s && s <= s1) {
        const Scalar t = (s - s0) / (s1 - s0);
        return bs[k].grid_point + t * (bs[k + 1].grid_point - bs[k].grid_point);
      }
    }
    return q;
  }

private:
  static Scalar param(const Point& a, const Point& b, const Point& q) { return dot(q - a, b - a) / sqdist(a, b); }

  const Polygon& original_;
  const Polygon& perturbed_;
  std::vector<std::vector<LabelBoundary>> b_;
};

// Same cell, or a corner and a cell having it on its boundary: the
// boundary itself moved by the perturbation, the label did not.
bool same_place(const Cell& a, const Cell& b) { return a == b || ((a.dim == 0 || b.dim == 0) && incident(a, b)); }

}  // namespace

EquivalenceReport verify_perturbed_equivalence(const Instance& original, const Polygon& perturbed,
                                               const ConfigGraph& g, int samples_per_edge) {
  if (samples_per_edge < 1) throw Error(ErrorCode::InvalidArgument, "samples_per_edge must be positive");
  const BoundaryMap map(original.polygon, perturbed);
  static const Scalar kOffsets[] = {Scalar(1, 8), Scalar(1, 16), Scalar(3, 16), Scalar(1, 32), Scalar(3, 32)};
  static const Scalar kNudges[] = {Scalar(1, 64), Scalar(1, 16)};
  // Outcomes of g grouped by source node and beacon target.
  std::map<std::pair<std::size_t, Cell>, std::set<Cell>> outcomes;
  for (const auto& e : g.edges) outcomes[{e.from, g.nodes[e.to].beacon}].insert(g.nodes[e.to].ball);

  // A grid corner shrinks to a tiny zone around its image, bounded by nearly
  // but not exactly concurrent extension lines. Points a short step away
  // along each allowed direction stand for the rest of that zone.
  auto nudges = [&](const Point& corner, const Point& image) {
    std::vector<Point> dirs{{Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(-1)}};
    const Location loc = locate_point(original.polygon, corner);
    if (loc.vertex) {
      const std::size_t i = *loc.vertex;
      dirs = {perturbed.vertex(i + 1) - image, perturbed.vertex(i + perturbed.size() - 1) - image};
      for (auto& d : dirs) d = Scalar(1) / (abs(d.x) + abs(d.y)) * d;
    } else if (loc.edge) {
      const Point d = perturbed.vertex(*loc.edge + 1) - perturbed.vertex(*loc.edge);
      const Point u = Scalar(1) / (abs(d.x) + abs(d.y)) * d;
      dirs = {u, Scalar(-1) * u};
    }
    std::vector<Point> out;
    for (const Scalar& r : kNudges) {
      for (const Point& d : dirs) {
        const Point q = image + r * d;
        if (beacon_allowed(perturbed, original.mode, q) &&
            beacon_allowed(perturbed, original.mode, image + (r / Scalar(2)) * d)) {
          out.push_back(q);
        }
      }
    }
    return out;
  };

  EquivalenceReport report;
  for (const auto& e : g.edges) {
    const ConfigNode& u = g.nodes[e.from];
    const ConfigNode& v = g.nodes[e.to];
    const Witness& w = g.witnesses[e.from];
    const auto& allowed = outcomes[{e.from, v.beacon}];
    auto run = [&](const std::vector<Point>& path) {
      Instance inst{original.name, perturbed, map.forward(w.ball), map.forward(w.beacon), BeaconMode::Free, {}};
      SessionState s = SessionState::start(inst);
      advance(s, BeaconPath{path});
      ++report.micro_paths;
      return std::make_pair(s.ball, cell_of(map.back(s.ball)));
    };
    bool realized = false;
    for (int k = 0; k < samples_per_edge; ++k) {
      const MicroPath mp = transition_micro_path(u.beacon, v.beacon, kOffsets[k % std::size(kOffsets)]);
      for (const Point& fin : mp.finals) {
        const Point approach = map.forward(mp.approach), image = map.forward(fin);
        const auto [ball, got] = run({approach, image});
        const bool before = v.beacon.dim == 0 && same_place(u.ball, got);
        const bool ok = before || std::any_of(allowed.begin(), allowed.end(), [&](const Cell& c) { return same_place(c, got); });
        if (!ok) {
          report.equivalent = false;
          report.edge = e;
          report.details = "from (" + u.beacon.str() + ", " + u.ball.str() + ") into " + v.beacon.str() +
                           ": perturbed ball rests at " + ball.str() + ", read back as " + got.str();
          return report;
        }
        realized = realized || same_place(v.ball, got);
        if (v.beacon.dim == 0) {
          for (const Point& q : nudges(fin, image)) {
            if (realized) break;
            realized = same_place(v.ball, run({approach, image, q}).second);
          }
        }
      }
    }
    if (!realized) {
      report.equivalent = false;
      report.edge = e;
      report.details = "no sampled micro-path from (" + u.beacon.str() + ", " + u.ball.str() + ") reproduces " +
                       v.ball.str();
      return report;
    }
    ++report.edges_checked;
  }
  return report;
}

Instance random_orthogonal_instance(long size, std::uint64_t seed) {
  if (size < 2) throw Error(ErrorCode::InvalidArgument, "size must be at least 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&](long n) { return static_cast<long>(rng() % static_cast<std::uint64_t>(n)); };
  // Grow a polyomino square by square, undoing any addition that would
  // enclose a hole or leave a corner-only contact.
  std::set<std::pair<long, long>> squares{{uniform(size), uniform(size)}};
  const long target = 1 + uniform(size * size / 2 + 1);
  for (long tries = 0; static_cast<long>(squares.size()) < target; ++tries) {
    if (tries > 100 * size * size) throw Error(ErrorCode::GenerationFailed, "polyomino growth stalled");
    auto it = squares.begin();
    std::advance(it, uniform(static_cast<long>(squares.size())));
    static const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
    const int d = static_cast<int>(uniform(4));
    const std::pair<long, long> next{it->first + dx[d], it->second + dy[d]};
    if (next.first < 0 || next.second < 0 || next.first >= size || next.second >= size) continue;
    if (!squares.insert(next).second) continue;
    try {
      polygon_from_squares(squares);
    } catch (const Error&) {
      squares.erase(next);
    }
  }
  Polygon poly = polygon_from_squares(squares);
  auto sq = squares.begin();
  std::advance(sq, uniform(static_cast<long>(squares.size())));
  const Point ball{Scalar(sq->first) + Scalar(1, 2), Scalar(sq->second) + Scalar(1, 2)};
  const Point beacon = poly.vertex(static_cast<std::size_t>(uniform(static_cast<long>(poly.size()))));
  return {"random-" + std::to_string(size) + "-" + std::to_string(seed), std::move(poly), ball, beacon,
          BeaconMode::BoundaryOnly, {}};
}

}  // namespace beacon
