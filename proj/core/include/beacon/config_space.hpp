#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "beacon/attraction.hpp"
#include "beacon/grid.hpp"

namespace beacon {

struct ConfigNode {
  Cell beacon;
  Cell ball;

  bool capture() const { return beacon == ball; }
  friend bool operator==(const ConfigNode&, const ConfigNode&) = default;
  friend auto operator<=>(const ConfigNode&, const ConfigNode&) = default;
};

/// Exact positions that realize a node: the beacon and the ball at rest.
struct Witness {
  Point beacon;
  Point ball;
};

struct ConfigEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const ConfigEdge&, const ConfigEdge&) = default;
  friend auto operator<=>(const ConfigEdge&, const ConfigEdge&) = default;
};

/// Reachable part of the configuration graph. Nodes are stored in discovery
/// (breadth-first) order; node 0 is the start.
struct ConfigGraph {
  BeaconMode mode = BeaconMode::BoundaryOnly;
  long margin = 2;
  std::vector<ConfigNode> nodes;
  std::vector<Witness> witnesses;
  std::vector<std::optional<std::size_t>> parent;  // BFS tree
  std::vector<ConfigEdge> edges;                   // sorted

  std::optional<std::size_t> find(const ConfigNode& n) const;
  std::size_t start() const { return 0; }

  std::map<ConfigNode, std::size_t> lookup;
};

/// Default displacement of the interior sample from the interface point.
inline const Scalar kDefaultSampleOffset(1, 8);

struct TransitionResult {
  ConfigNode node;
  Witness witness;
};

/// Beacon positions of one transition: a point of the current cell next to
/// the target, then one or two points inside the target.
struct MicroPath {
  Point approach;
  std::vector<Point> finals;
};

MicroPath transition_micro_path(const Cell& current, const Cell& target, const Scalar& offset = kDefaultSampleOffset);

/// Moves the beacon quasi-statically from its witness position in
/// node.beacon into the incident cell `target` and reports where the ball
/// comes to rest. A move from a corner into a square is sampled on both sides
/// of the square's diagonal, so up to two distinct outcomes are returned.
/// Throws NotIncident, BeaconOutsideSpace or ModelViolation.
std::vector<TransitionResult> transition(const Polygon& poly, const CellSpace& beacon_cells,
                                         const CellSpace& ball_cells, const ConfigNode& node,
                                         const Witness& witness, const Cell& target,
                                         const Scalar& offset = kDefaultSampleOffset);

struct ExploreOptions {
  BeaconMode mode = BeaconMode::BoundaryOnly;
  long margin = 2;
  Scalar offset = kDefaultSampleOffset;
  unsigned threads = 1;
  std::size_t max_nodes = 2'000'000;
  bool stop_at_capture = false;  // finish the level where a capture node first appears
};

/// Breadth-first closure of `transition` from the start configuration. The
/// ball is first attracted to rest for the starting beacon.
ConfigGraph explore_bfs(const Polygon& poly, const Point& ball_start, const Point& beacon_start,
                        const ExploreOptions& options = {});

struct CaptureResult {
  bool capturable = false;
  std::vector<std::size_t> path;  // node indices from start to a capture node
};

/// Shortest (fewest transitions) route to a node whose beacon and ball cells coincide.
CaptureResult check_capture(const ConfigGraph& g);

/// Beacon waypoints realizing a BFS-tree path of nodes: for each step, the
/// approach point inside the current cell and then the witness position in
/// the next. Ends with the last node's witness ball position when that node
/// is a capture, so a replay finishes on the ball.
std::vector<Point> witness_waypoints(const ConfigGraph& g, const std::vector<std::size_t>& path,
                                     const Scalar& offset = kDefaultSampleOffset);

struct LabelMap {
  std::map<std::string, Cell> faces;                   // label -> interior face
  std::map<Cell, std::vector<std::string>> ball_labels; // reachable ball cell -> labels
  std::map<Cell, std::set<std::string>> beacon_zones;   // beacon cell -> labels of co-reachable balls
};

/// Labels every reachable ball cell by the interior faces incident to it.
LabelMap label_regions(const Polygon& poly, const ConfigGraph& g);

/// GraphViz rendering with deterministic node order; capture nodes are highlighted.
std::string export_dot(const ConfigGraph& g);

/// Every beacon cell's co-reachable ball cells.
std::map<Cell, std::set<Cell>> ball_cells_by_beacon(const ConfigGraph& g);

struct InvarianceIssue {
  std::size_t node = 0;
  Cell target;
  std::string detail;
};

/// Re-derives every transition with each sample offset and with `extra_witnesses`
/// perturbed witness positions per node, reporting outcomes that differ from g.
std::vector<InvarianceIssue> check_sample_invariance(const Polygon& poly, const ConfigGraph& g,
                                                     const std::vector<Scalar>& offsets,
                                                     unsigned extra_witnesses = 0, unsigned seed = 1);

}  // namespace beacon
