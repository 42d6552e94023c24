#include "beacon/config_space.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <thread>

#include "beacon/error.hpp"

namespace beacon {

std::optional<std::size_t> ConfigGraph::find(const ConfigNode& n) const {
  auto it = lookup.find(n);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

namespace {

// Points inside `target` reached by moving from `from` by `offset`. Diagonal
// moves are skewed to either side of the diagonal, never along it: a beacon
// on a grid diagonal can balance the ball on a reflex corner.
std::vector<Point> samples_toward(const Point& from, const Cell& target, const Scalar& offset) {
  const Point d = target.representative() - from;
  const Scalar sx(d.x.sign()), sy(d.y.sign());
  if (sx.is_zero() || sy.is_zero()) return {from + offset * Point{sx, sy}};
  const Scalar half = offset / Scalar(2);
  return {from + Point{offset * sx, half * sy}, from + Point{half * sx, offset * sy}};
}

}  // namespace

MicroPath transition_micro_path(const Cell& current, const Cell& target, const Scalar& offset) {
  // Phase one keeps the beacon inside its current cell up to the interface
  // point; phase two crosses into the target.
  if (target.dim < current.dim) {
    return {samples_toward(target.representative(), current, offset).front(), {target.representative()}};
  }
  return {current.representative(), samples_toward(current.representative(), target, offset)};
}

std::vector<TransitionResult> transition(const Polygon& poly, const CellSpace& beacon_cells,
                                         const CellSpace& ball_cells, const ConfigNode& node,
                                         const Witness& witness, const Cell& target, const Scalar& offset) {
  if (!incident(node.beacon, target)) {
    throw Error(ErrorCode::NotIncident, target.str() + " is not incident to " + node.beacon.str());
  }
  if (!beacon_cells.contains(target)) {
    throw Error(ErrorCode::BeaconOutsideSpace, target.str() + " is outside the beacon space");
  }

  const auto [inside_current, finals] = transition_micro_path(node.beacon, target, offset);
  const Trajectory settle = attract(poly, witness.ball, inside_current);
  if (!node.ball.closure_contains(settle.rest)) {
    throw Error(ErrorCode::ModelViolation, "ball left " + node.ball.str() + " for " + settle.rest.str() +
                                               " while the beacon stayed in " + node.beacon.str());
  }
  std::vector<TransitionResult> out;
  for (const Point& beacon_at : finals) {
    const Trajectory moved = attract(poly, settle.rest, beacon_at);
    TransitionResult r{{target, cell_of(moved.rest)}, {beacon_at, moved.rest}};
    if (!ball_cells.contains(r.node.ball)) {
      throw Error(ErrorCode::ModelViolation, "ball came to rest at " + moved.rest.str() + " off the ball space");
    }
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.node == r.node; });
    if (!seen) out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct Expansion {
  std::vector<std::pair<Cell, TransitionResult>> results;
  std::optional<std::string> failure;
};

Expansion expand(const Polygon& poly, const CellSpace& beacon_cells, const CellSpace& ball_cells,
                 const ConfigNode& node, const Witness& witness, const Scalar& offset) {
  Expansion out;
  for (const Cell& target : incident_cells(node.beacon)) {
    if (!beacon_cells.contains(target)) continue;
    try {
      for (auto& r : transition(poly, beacon_cells, ball_cells, node, witness, target, offset)) {
        out.results.emplace_back(target, std::move(r));
      }
    } catch (const Error& e) {
      out.failure = "from (" + node.beacon.str() + ", " + node.ball.str() + ") to " + target.str() + ": " + e.what();
      if (e.code() != ErrorCode::ModelViolation) throw;
      break;
    }
  }
  return out;
}

}  // namespace

ConfigGraph explore_bfs(const Polygon& poly, const Point& ball_start, const Point& beacon_start,
                        const ExploreOptions& options) {
  const CellSpace ball_cells = ball_space(poly);
  const CellSpace beacon_cells = beacon_space(poly, options.mode, options.margin);
  const Cell start_cell = cell_of(beacon_start);
  if (!beacon_cells.contains(start_cell)) {
    throw Error(ErrorCode::BeaconOutsideSpace, "beacon start " + beacon_start.str() + " is outside the beacon space");
  }
  const Trajectory initial = attract(poly, ball_start, beacon_start);
  const Cell ball_cell = cell_of(initial.rest);
  if (!ball_cells.contains(ball_cell)) {
    throw Error(ErrorCode::ModelViolation, "initial rest " + initial.rest.str() + " is off the ball space");
  }

  ConfigGraph g;
  g.mode = options.mode;
  g.margin = options.margin;
  auto add = [&g](const ConfigNode& n, const Witness& w, std::optional<std::size_t> parent) {
    const std::size_t id = g.nodes.size();
    g.nodes.push_back(n);
    g.witnesses.push_back(w);
    g.parent.push_back(parent);
    g.lookup.emplace(n, id);
    return id;
  };
  add({start_cell, ball_cell}, {beacon_start, initial.rest}, std::nullopt);

  const unsigned threads = std::max(1u, options.threads);
  std::size_t level_begin = 0;
  while (level_begin < g.nodes.size()) {
    const std::size_t level_end = g.nodes.size();
    std::vector<Expansion> expansions(level_end - level_begin);
    auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t k = first; k < expansions.size(); k += stride) {
        const std::size_t id = level_begin + k;
        expansions[k] = expand(poly, beacon_cells, ball_cells, g.nodes[id], g.witnesses[id], options.offset);
      }
    };
    if (threads == 1 || expansions.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }
    // Merge in frontier order so the graph does not depend on scheduling.
    for (std::size_t k = 0; k < expansions.size(); ++k) {
      if (expansions[k].failure) throw Error(ErrorCode::ModelViolation, *expansions[k].failure);
      const std::size_t from = level_begin + k;
      for (auto& [target, result] : expansions[k].results) {
        auto found = g.find(result.node);
        const std::size_t to = found ? *found : add(result.node, result.witness, from);
        g.edges.push_back({from, to});
      }
    }
    if (g.nodes.size() > options.max_nodes) {
      throw Error(ErrorCode::ModelViolation, "configuration graph exceeded " + std::to_string(options.max_nodes) + " nodes");
    }
    level_begin = level_end;
    if (options.stop_at_capture &&
        std::any_of(g.nodes.begin(), g.nodes.end(), [](const ConfigNode& n) { return n.capture(); })) {
      break;
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

CaptureResult check_capture(const ConfigGraph& g) {
  CaptureResult out;
  // Discovery order is breadth-first, so the parent chain is a shortest route.
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    if (!g.nodes[id].capture()) continue;
    out.capturable = true;
    for (std::optional<std::size_t> at = id; at; at = g.parent[*at]) out.path.push_back(*at);
    std::reverse(out.path.begin(), out.path.end());
    return out;
  }
  return out;
}

std::vector<Point> witness_waypoints(const ConfigGraph& g, const std::vector<std::size_t>& path,
                                     const Scalar& offset) {
  std::vector<Point> out;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const std::size_t from = path[k - 1], to = path[k];
    if (g.parent[to] != from) throw Error(ErrorCode::InvalidArgument, "path does not follow the BFS tree");
    out.push_back(transition_micro_path(g.nodes[from].beacon, g.nodes[to].beacon, offset).approach);
    out.push_back(g.witnesses[to].beacon);
  }
  if (!path.empty() && g.nodes[path.back()].capture()) out.push_back(g.witnesses[path.back()].ball);
  return out;
}

namespace {

std::string label_name(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

std::vector<Cell> interior_faces(const Polygon& poly, const Cell& c) {
  std::vector<Cell> out;
  for (const Cell& f : incident_cells(c)) {
    if (f.dim == 2 && locate_point(poly, f.representative()).kind == Location::Kind::Interior) out.push_back(f);
  }
  return out;
}

}  // namespace

LabelMap label_regions(const Polygon& poly, const ConfigGraph& g) {
  std::map<Cell, std::vector<Cell>> faces_of;
  std::set<Cell> all_faces;
  for (const auto& n : g.nodes) {
    if (faces_of.count(n.ball)) continue;
    auto faces = interior_faces(poly, n.ball);
    all_faces.insert(faces.begin(), faces.end());
    faces_of.emplace(n.ball, std::move(faces));
  }
  // Letters run left to right, top to bottom within a column.
  std::vector<Cell> ordered(all_faces.begin(), all_faces.end());
  std::sort(ordered.begin(), ordered.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.x, b.y) < std::tie(b.x, a.y);
  });
  LabelMap out;
  std::map<Cell, std::string> name_of;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    name_of[ordered[k]] = label_name(k);
    out.faces[label_name(k)] = ordered[k];
  }
  for (const auto& [ball, faces] : faces_of) {
    auto& labels = out.ball_labels[ball];
    for (const Cell& f : faces) labels.push_back(name_of[f]);
    std::sort(labels.begin(), labels.end());
  }
  for (const auto& n : g.nodes) {
    auto& zone = out.beacon_zones[n.beacon];
    for (const auto& l : out.ball_labels[n.ball]) zone.insert(l);
  }
  return out;
}

std::string export_dot(const ConfigGraph& g) {
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.nodes[a] < g.nodes[b]; });
  std::vector<std::size_t> rank(g.nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::ostringstream os;
  os << "digraph configuration {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& n = g.nodes[order[r]];
    os << "  n" << r << " [label=\"" << n.beacon.str() << " / " << n.ball.str() << "\"";
    if (n.capture()) os << ", class=\"capture\", style=filled, fillcolor=red";
    if (order[r] == g.start()) os << ", peripheries=2";
    os << "];\n";
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges) edges.emplace_back(rank[e.from], rank[e.to]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::map<Cell, std::set<Cell>> ball_cells_by_beacon(const ConfigGraph& g) {
  std::map<Cell, std::set<Cell>> out;
  for (const auto& n : g.nodes) out[n.beacon].insert(n.ball);
  return out;
}

namespace {

Point random_point_in(const Cell& c, std::mt19937& rng) {
  std::uniform_int_distribution<long> pick(1, 63);
  const Scalar u(pick(rng), 64);
  const Scalar v(pick(rng), 64);
  const Point base{Scalar(c.x), Scalar(c.y)};
  switch (c.dim) {
    case 0: return base;
    case 1: return c.axis == Axis::Horizontal ? Point{base.x + u, base.y} : Point{base.x, base.y + u};
    default: return {base.x + u, base.y + v};
  }
}

}  // namespace

std::vector<InvarianceIssue> check_sample_invariance(const Polygon& poly, const ConfigGraph& g,
                                                     const std::vector<Scalar>& offsets,
                                                     unsigned extra_witnesses, unsigned seed) {
  const CellSpace ball_cells = ball_space(poly);
  const CellSpace beacon_cells = beacon_space(poly, g.mode, g.margin);
  std::mt19937 rng(seed);
  std::vector<InvarianceIssue> issues;

  auto compare = [&](std::size_t id, const Witness& w, const Scalar& offset, const std::string& how) {
    const auto& node = g.nodes[id];
    for (const Cell& target : incident_cells(node.beacon)) {
      if (!beacon_cells.contains(target)) continue;
      try {
        for (const auto& r : transition(poly, beacon_cells, ball_cells, node, w, target, offset)) {
          const auto to = g.find(r.node);
          if (!to || !std::binary_search(g.edges.begin(), g.edges.end(), ConfigEdge{id, *to})) {
            issues.push_back({id, target, how + " reached unrecorded node " + r.node.ball.str()});
          }
        }
      } catch (const Error& e) {
        issues.push_back({id, target, how + ": " + e.what()});
      }
    }
  };

  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    for (const Scalar& offset : offsets) compare(id, g.witnesses[id], offset, "offset " + offset.str());
    for (unsigned k = 0; k < extra_witnesses; ++k) {
      const Point b = random_point_in(g.nodes[id].beacon, rng);
      const Trajectory t = attract(poly, g.witnesses[id].ball, b);
      if (cell_of(t.rest) != g.nodes[id].ball) {
        issues.push_back({id, g.nodes[id].beacon, "beacon move within its cell moved the ball to " + t.rest.str()});
        continue;
      }
      compare(id, {b, t.rest}, kDefaultSampleOffset, "witness " + b.str());
    }
  }
  return issues;
}

}  // namespace beacon
