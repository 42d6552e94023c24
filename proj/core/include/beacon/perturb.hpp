#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beacon/config_space.hpp"
#include "beacon/instance.hpp"

namespace beacon {

/// Edges whose supporting lines share one coordinate.
struct ExtensionClass {
  Scalar coordinate;
  std::vector<std::size_t> edges;
};

/// Per-axis order of edge extensions. Horizontal edges are ordered by y,
/// vertical edges by x; a tilted edge is placed where its line crosses the
/// midline of the bounding box.
struct ExtensionOrder {
  std::vector<ExtensionClass> horizontal;
  std::vector<ExtensionClass> vertical;
};

/// Throws NotNearOrthogonal if an edge is more than 0.1 radian off both axes.
ExtensionOrder extension_orders(const Polygon& poly);

struct OrderCheck {
  bool preserved = true;
  Axis axis = Axis::Horizontal;                          // of the violated pair
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // edges that swapped or merged
};

/// Every strictly ordered pair in `before` must keep its order in `after`.
/// Throws EdgeSetMismatch if the edge partition by axis differs.
OrderCheck check_order_preserved(const ExtensionOrder& before, const ExtensionOrder& after);

/// Largest |dy|/|dx| (or |dx|/|dy|) over all edges, against their nearest axis.
Scalar max_edge_slope(const Polygon& poly);

/// Moves every vertex by an independent offset with |dx|, |dy| <= eps/2 on
/// the 1/denominator lattice, then resamples offending vertices until the
/// polygon is simple, in general position, keeps its extension orders and has
/// every edge slope at most eps. Throws PerturbationFailed after `max_rounds`.
Polygon perturb(const Polygon& poly, const Scalar& eps, std::uint64_t seed, long denominator = 1'000'000,
                int max_rounds = 1000);

/// Where the label of a ball on `carrier` changes. On the orthogonal polygon
/// it is the grid point; on the perturbed one it is the carrier crossing the
/// extension of `defining`.
struct LabelBoundary {
  std::size_t carrier = 0;
  Point grid_point;
  std::optional<std::size_t> defining;
  Point perturbed_point;
};

/// Boundaries along every edge, ordered along the edge, endpoints included
/// (a vertex is defined by its other incident edge). Grid lines carrying no
/// polygon edge fall back to the proportional point and have no `defining`.
std::vector<std::vector<LabelBoundary>> boundaries_along_edges(const Polygon& original, const Polygon& perturbed);

/// Interior label boundaries on edges touched by `ball_cells` (all edges if
/// null). Throws MissingCorrespondence if one is not defined by a polygon edge.
std::vector<LabelBoundary> perturbed_label_boundaries(const Polygon& perturbed, const Instance& original,
                                                      const std::set<Cell>* ball_cells = nullptr);

struct EquivalenceReport {
  bool equivalent = true;
  std::size_t edges_checked = 0;
  std::size_t micro_paths = 0;
  std::optional<ConfigEdge> edge;  // first counter example
  std::string details;
};

/// Replays every edge of g in the perturbed polygon: the beacon walks the
/// image of the transition's micro-path and the ball's resting place is read
/// back through the perturbed boundaries. Offsets vary per sample. A corner
/// target becomes a small zone around the perturbed corner: at the corner
/// itself the ball may still be in its previous cell, and a point of the
/// zone (up to 1/16 away) must reproduce the transition.
EquivalenceReport verify_perturbed_equivalence(const Instance& original, const Polygon& perturbed,
                                               const ConfigGraph& g, int samples_per_edge);

/// Random polyomino inside a size x size box with a square-centre ball and a
/// boundary-vertex beacon. Throws GenerationFailed.
Instance random_orthogonal_instance(long size, std::uint64_t seed);

}  // namespace beacon
