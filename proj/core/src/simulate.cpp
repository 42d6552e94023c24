#include "beacon/simulate.hpp"

#include <cmath>

#include "beacon/error.hpp"

namespace beacon {

SessionState SessionState::start(const Instance& inst) {
  validate(inst);
  SessionState s{inst, inst.beacon, inst.ball, false, {}};
  Trajectory t = attract(inst.polygon, inst.ball, inst.beacon);
  s.ball = t.rest;
  s.captured = s.ball == s.beacon;
  s.log.push_back({inst.beacon, std::move(t)});
  return s;
}

std::optional<Cell> SessionState::beacon_cell() const {
  if (!instance.polygon.grid_orthogonal()) return std::nullopt;
  return cell_of(beacon);
}

std::optional<Cell> SessionState::ball_cell() const {
  if (!instance.polygon.grid_orthogonal()) return std::nullopt;
  return cell_of(ball);
}

long increments_for(const Point& from, const Point& to, const Scalar& step) {
  if (step.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const Scalar len2 = sqdist(from, to);
  if (len2.is_zero()) return 0;
  // Smallest k with len2 <= (k * step)^2, starting from a floating estimate.
  long k = std::max(1L, static_cast<long>(std::floor(std::sqrt(len2.to_double()) / step.to_double())));
  while (k > 1 && len2 <= Scalar(k - 1) * Scalar(k - 1) * step * step) --k;
  while (len2 > Scalar(k) * Scalar(k) * step * step) ++k;
  return k;
}

void advance(SessionState& state, const BeaconPath& path, const Scalar& step) {
  if (step.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const Polygon& poly = state.instance.polygon;
  for (const Point& waypoint : path.waypoints) {
    if (state.captured) return;
    const Point from = state.beacon;
    const long k = increments_for(from, waypoint, step);
    for (long i = 1; i <= k; ++i) {
      const Point next = i == k ? waypoint : from + Scalar(i, k) * (waypoint - from);
      if (!beacon_allowed(poly, state.instance.mode, next)) {
        throw Error(ErrorCode::PathViolatesMode,
                    "beacon position " + next.str() + " is not allowed in mode " + to_string(state.instance.mode));
      }
      Trajectory t = attract(poly, state.ball, next);
      state.beacon = next;
      state.ball = t.rest;
      state.log.push_back({next, std::move(t)});
      if (state.ball == state.beacon) {
        state.captured = true;
        return;
      }
    }
  }
}

SessionState simulate_beacon_path(const Instance& inst, const BeaconPath& path, const Scalar& step) {
  SessionState s = SessionState::start(inst);
  advance(s, path, step);
  return s;
}

}  // namespace beacon
