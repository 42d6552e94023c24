#pragma once

#include <string>

#include "beacon/config_space.hpp"
#include "beacon/instance.hpp"
#include "beacon/simulate.hpp"

namespace beacon {

struct SvgOptions {
  const LabelMap* labels = nullptr;     // colours every labelled face
  const SessionState* state = nullptr;  // dots at the live positions instead of the starts
  double scale = 24;                    // pixels per grid unit
};

/// Deterministic rendering: the polygon as one path, annotated squares,
/// optional label zones, a grey ball dot and an orange beacon dot.
std::string export_svg(const Instance& inst, const SvgOptions& options = {});

/// Distinct fill for the k-th label zone.
std::string zone_colour(std::size_t k);

}  // namespace beacon
