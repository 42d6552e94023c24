#pragma once

#include <string>
#include <string_view>

#include "beacon/instance.hpp"

namespace beacon {

/// Parses "boundary", "boundary+exterior" or "free", the names printed by
/// to_string(BeaconMode). Throws ParseError.
BeaconMode parse_mode(std::string_view text);

/// Reads an instance document. Coordinates are "p/q" strings or integers.
/// Throws ParseError with the JSON path of the offending value, or the
/// validation errors of Polygon and validate().
Instance instance_from_json(std::string_view text);

/// Canonical text: keys sorted, rationals as strings, two-space indent.
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace beacon
