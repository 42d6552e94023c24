#include "beacon/library.hpp"

#include <algorithm>
#include <map>

#include "beacon/error.hpp"

namespace beacon {

namespace {

// Top row first. L and R are the hooks (C belongs to both), + is the rest of
// the polygon, 1 and 2 are the pockets W1 and W2, . is other exterior.
const char* const kCounterexample[] = {
    "+++++++2+++++++++++++++",
    "+2222222+++++++++++++++",
    "+2LLLLL2+++++++++++++++",
    "+2L++2L2+++++++++++++++",
    "+2L++2L2+++++++++++++++",
    "+2L++2L2+++++++++++++++",
    "+2L++222+++++++++++++++",
    "+2L++++++++++++++++++++",
    "+2L1111111111111111111+",
    "+2LLLLLLLLLCRRRRRRRRR1+",
    "+2222222222222222222R1+",
    "++++++++++++++++++++R1+",
    "+++++++++++++++111++R1+",
    "+++++++++++++++1R1++R1+",
    "+++++++++++++++1R1++R1+",
    "+++++++++++++++1R1++R1+",
    "+++++++++++++++1RRRRR1+",
    "+++++++++++++++1111111+",
    "+++++++++++++++1+++++++",
};

const Point kBallStart{Scalar(13, 2), Scalar(27, 2)};
const Point kBeaconStart{Scalar(0), Scalar(0)};

}  // namespace

std::set<std::pair<long, long>> orthogonal_hull(const std::set<std::pair<long, long>>& squares) {
  std::set<std::pair<long, long>> out = squares;
  for (bool grew = true; grew;) {
    grew = false;
    std::map<long, std::pair<long, long>> rows, cols;
    for (auto [x, y] : out) {
      auto [r, rn] = rows.try_emplace(y, x, x);
      if (!rn) r->second = {std::min(r->second.first, x), std::max(r->second.second, x)};
      auto [c, cn] = cols.try_emplace(x, y, y);
      if (!cn) c->second = {std::min(c->second.first, y), std::max(c->second.second, y)};
    }
    for (auto [y, span] : rows) {
      for (long x = span.first; x <= span.second; ++x) grew = out.insert({x, y}).second || grew;
    }
    for (auto [x, span] : cols) {
      for (long y = span.first; y <= span.second; ++y) grew = out.insert({x, y}).second || grew;
    }
  }
  return out;
}

Instance builtin_counterexample() {
  const long h = static_cast<long>(std::size(kCounterexample));
  std::set<std::pair<long, long>> interior;
  Annotations ann;
  for (long r = 0; r < h; ++r) {
    const std::string row = kCounterexample[r];
    for (long x = 0; x < static_cast<long>(row.size()); ++x) {
      const std::pair<long, long> sq{x, h - 1 - r};
      switch (row[x]) {
        case 'L': ann["hook_left"].push_back(sq); break;
        case 'R': ann["hook_right"].push_back(sq); break;
        case 'C':
          ann["hook_left"].push_back(sq);
          ann["hook_right"].push_back(sq);
          break;
        case '1': ann["pocket_w1"].push_back(sq); break;
        case '2': ann["pocket_w2"].push_back(sq); break;
        default: break;
      }
      if (row[x] == 'L' || row[x] == 'R' || row[x] == 'C' || row[x] == '+') interior.insert(sq);
      if (row[x] == 'L' || row[x] == 'R' || row[x] == 'C') ann["core"].push_back(sq);
    }
  }
  const auto hull = orthogonal_hull(interior);
  ann["orthogonal_hull"].assign(hull.begin(), hull.end());
  for (auto& [name, list] : ann) std::sort(list.begin(), list.end());
  return {"counterexample", polygon_from_squares(interior), kBallStart, kBeaconStart, BeaconMode::BoundaryOnly,
          std::move(ann)};
}

std::pair<long, long> counterexample_rotation() {
  return {static_cast<long>(std::string(kCounterexample[0]).size()), static_cast<long>(std::size(kCounterexample))};
}

Instance builtin_square() {
  return {"square",
          Polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}),
          {Scalar(2), Scalar(2)},
          {Scalar(0), Scalar(0)},
          BeaconMode::BoundaryOnly,
          {}};
}

Instance builtin_l_shape() {
  return {"l-shape",
          Polygon({{0, 0}, {4, 0}, {4, 4}, {3, 4}, {3, 1}, {0, 1}}),
          {Scalar(0), Scalar(1)},
          {Scalar(4), Scalar(4)},
          BeaconMode::BoundaryOnly,
          {}};
}

std::vector<std::string> builtin_names() { return {"counterexample", "l-shape", "square"}; }

Instance builtin(const std::string& name) {
  if (name == "counterexample") return builtin_counterexample();
  if (name == "square") return builtin_square();
  if (name == "l-shape") return builtin_l_shape();
  throw Error(ErrorCode::InvalidArgument, "no built-in instance named \"" + name + "\"");
}

}  // namespace beacon
