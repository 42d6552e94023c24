#include "beacon/geodesic.hpp"

#include <map>

#include "beacon/error.hpp"

namespace beacon {

namespace {

// sqrt(p/q) = sqrt(p*q) / q: the integer radicand and its rational factor.
std::pair<mpz_class, mpq_class> integer_root(const Scalar& r) {
  return {r.num() * r.den(), mpq_class(1, r.den())};
}

}  // namespace

std::pair<Scalar, Scalar> RadicalSum::bounds(unsigned bits) const {
  mpq_class lo = 0, hi = 0;
  const mpz_class scale = mpz_class(1) << bits;
  for (const Scalar& r : radicands) {
    if (r.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative radicand");
    const auto [a, factor] = integer_root(r);
    mpz_class m;
    const mpz_class shifted = a << (2 * bits);
    mpz_sqrt(m.get_mpz_t(), shifted.get_mpz_t());  // floor(sqrt(a) * 2^bits)
    lo += factor * mpq_class(m, scale);
    hi += factor * mpq_class(m + (m * m == shifted ? 0 : 1), scale);
  }
  lo.canonicalize();
  hi.canonicalize();
  return {Scalar(lo), Scalar(hi)};
}

double RadicalSum::approx() const {
  const auto [lo, hi] = bounds(64);
  return ((lo + hi) / Scalar(2)).to_double();
}

bool radical_equal(const RadicalSum& a, const RadicalSum& b) {
  // Roots of integers are rationally dependent exactly when their product is
  // a square, and roots of distinct square-free kernels are independent, so
  // the sums agree iff every dependency class cancels.
  struct Term {
    mpz_class radicand;
    mpq_class coeff;
  };
  std::vector<Term> terms;
  for (const auto* sum : {&a, &b}) {
    const int sign = sum == &a ? 1 : -1;
    for (const Scalar& r : sum->radicands) {
      if (r.is_zero()) continue;
      auto [n, f] = integer_root(r);
      terms.push_back({n, sign * f});
    }
  }
  std::vector<std::pair<mpz_class, mpq_class>> classes;  // representative radicand, rational total
  for (const Term& t : terms) {
    bool placed = false;
    for (auto& [rep, total] : classes) {
      const mpz_class prod = rep * t.radicand;
      if (mpz_perfect_square_p(prod.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        total += t.coeff * mpq_class(root, rep);  // sqrt(t) = sqrt(t * rep) / rep in units of sqrt(rep)
        total.canonicalize();
        placed = true;
        break;
      }
    }
    if (!placed) classes.emplace_back(t.radicand, t.coeff);
  }
  for (const auto& [rep, total] : classes) {
    if (sgn(total) != 0) return false;
  }
  return true;
}

std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b) {
  if (radical_equal(a, b)) return std::strong_ordering::equal;
  for (unsigned bits = 32;; bits *= 2) {
    const auto [alo, ahi] = a.bounds(bits);
    const auto [blo, bhi] = b.bounds(bits);
    if (ahi < blo) return std::strong_ordering::less;
    if (bhi < alo) return std::strong_ordering::greater;
  }
}

RadicalSum polyline_length(const std::vector<Point>& path) {
  RadicalSum out;
  for (std::size_t i = 1; i < path.size(); ++i) out.add(sqdist(path[i - 1], path[i]));
  return out;
}

std::vector<Point> geodesic(const Polygon& poly, const Point& s, const Point& t) {
  for (const Point* p : {&s, &t}) {
    if (!contains(poly, *p)) throw Error(ErrorCode::PointOutsidePolygon, p->str() + " is outside the polygon");
  }
  if (segment_inside(poly, s, t)) return s == t ? std::vector<Point>{s} : std::vector<Point>{s, t};

  // Node 0 is s, node 1 is t, then the polygon vertices.
  std::vector<Point> nodes{s, t};
  nodes.insert(nodes.end(), poly.vertices().begin(), poly.vertices().end());
  const std::size_t n = nodes.size();
  std::vector<std::optional<RadicalSum>> dist(n);
  std::vector<std::size_t> prev(n, n);
  std::vector<bool> done(n, false);
  dist[0] = RadicalSum{};
  while (true) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || !dist[i]) continue;
      if (u == n || compare(*dist[i], *dist[u]) < 0) u = i;
    }
    if (u == n || u == 1) break;
    done[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || nodes[u] == nodes[v] || !segment_inside(poly, nodes[u], nodes[v])) continue;
      RadicalSum cand = *dist[u];
      cand.add(sqdist(nodes[u], nodes[v]));
      if (!dist[v] || compare(cand, *dist[v]) < 0) {
        dist[v] = std::move(cand);
        prev[v] = u;
      }
    }
  }
  if (!dist[1]) throw Error(ErrorCode::ModelViolation, "target not reachable inside the polygon");
  std::vector<Point> path;
  for (std::size_t at = 1; at != n; at = prev[at]) path.insert(path.begin(), nodes[at]);
  return path;
}

GeodesicCaptureReport demo_geodesic_capture(const Instance& inst, const Scalar& step, int max_rounds) {
  if (inst.mode != BeaconMode::Free) {
    throw Error(ErrorCode::NotFreeMode, "the geodesic walk needs a beacon that may enter the polygon");
  }
  GeodesicCaptureReport report{false, {inst.beacon}, 0, {}, Scalar(0), SessionState::start(inst)};
  SessionState& s = report.final_state;
  Point goal = inst.ball;
  while (!s.captured && report.rounds < max_rounds) {
    const std::vector<Point> path = geodesic(inst.polygon, s.beacon, goal);
    ++report.rounds;
    advance(s, BeaconPath{{path.begin() + 1, path.end()}}, step);
    // The walk stops at capture; record only what was walked.
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Point& last = report.beacon_path.back();
      if (s.captured && on_segment(Segment(last, path[i]), s.beacon) && !(s.beacon == last)) {
        report.beacon_path.push_back(s.beacon);
        break;
      }
      report.beacon_path.push_back(path[i]);
      if (s.captured && path[i] == s.beacon) break;
    }
    goal = s.ball;
  }
  report.captured = s.captured;
  report.length = polyline_length(report.beacon_path);
  report.length_upper = report.length.bounds(32).second;
  if (!report.captured) {
    throw Error(ErrorCode::CaptureFailed,
                "ball not captured after " + std::to_string(report.rounds) + " geodesic walks; ball at " +
                    s.ball.str() + ", beacon at " + s.beacon.str());
  }
  return report;
}

}  // namespace beacon
