#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beacon/instance.hpp"

namespace beacon {

/// The negative instance: two interlocked hooks forming the core, light
/// filler around them, and the two exterior pockets that steer the beacon.
/// Annotated with core, hook_left, hook_right, pocket_w1, pocket_w2 and
/// orthogonal_hull.
Instance builtin_counterexample();

/// Doubled centre of the half turn that exchanges the hooks, in the form
/// taken by Cell::rotated_half_turn.
std::pair<long, long> counterexample_rotation();

/// 4 x 4 square, ball at its centre, beacon at a corner.
Instance builtin_square();

/// The L-shape (0,0),(4,0),(4,4),(3,4),(3,1),(0,1).
Instance builtin_l_shape();

std::vector<std::string> builtin_names();

/// Throws InvalidArgument for an unknown name.
Instance builtin(const std::string& name);

/// Smallest row- and column-convex union of squares containing `squares`.
std::set<std::pair<long, long>> orthogonal_hull(const std::set<std::pair<long, long>>& squares);

}  // namespace beacon
