#include "support/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beacon::testing {

namespace {

constexpr double kTol = 1e-9;

Vec sub(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec add(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec mul(double s, Vec a) { return {s * a.x, s * a.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
double norm(Vec a) { return std::sqrt(dot(a, a)); }

struct Poly {
  std::vector<Vec> v;
  std::size_t n() const { return v.size(); }
  Vec a(std::size_t i) const { return v[i]; }
  Vec b(std::size_t i) const { return v[(i + 1) % v.size()]; }
};

double seg_dist(Vec p, Vec a, Vec b) {
  const Vec d = sub(b, a);
  const double t = std::clamp(dot(sub(p, a), d) / dot(d, d), 0.0, 1.0);
  return norm(sub(p, add(a, mul(t, d))));
}

bool on_boundary(const Poly& P, Vec p) {
  for (std::size_t i = 0; i < P.n(); ++i)
    if (seg_dist(p, P.a(i), P.b(i)) < kTol) return true;
  return false;
}

// Even-odd ray casting; boundary points count as inside.
bool inside(const Poly& P, Vec p) {
  if (on_boundary(P, p)) return true;
  bool in = false;
  for (std::size_t i = 0; i < P.n(); ++i) {
    const Vec a = P.a(i), b = P.b(i);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) in = !in;
    }
  }
  return in;
}

// Moving from p in unit direction u stays in P for a short while.
bool feasible(const Poly& P, Vec p, Vec u) {
  for (double eps : {1e-7, 1e-5}) {
    if (!inside(P, add(p, mul(eps, u)))) return false;
  }
  return true;
}

// Distance along u from p to the first boundary crossing, capped at `limit`.
double free_run(const Poly& P, Vec p, Vec u, double limit) {
  double best = limit;
  for (std::size_t i = 0; i < P.n(); ++i) {
    const Vec a = P.a(i), d = sub(P.b(i), a);
    const double den = cross(u, d);
    if (std::abs(den) < 1e-15) continue;
    const Vec ap = sub(a, p);
    const double t = cross(ap, d) / den, s = cross(ap, u) / den;
    if (t > 1e-9 && s >= -kTol && s <= 1 + kTol) best = std::min(best, t);
  }
  return best;
}

}  // namespace

Vec to_vec(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

double distance(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

std::vector<Vec> attract_oracle(const Polygon& poly, const Point& ball, const Point& beacon, double step) {
  Poly P;
  for (const auto& v : poly.vertices()) P.v.push_back(to_vec(v));
  const Vec b = to_vec(beacon);
  Vec p = to_vec(ball);
  std::vector<Vec> out{p};
  const std::size_t cap = 1'000'000;
  for (std::size_t it = 0; it < cap; ++it) {
    const double r = distance(p, b);
    if (r < kTol) break;
    const Vec toward = mul(1 / r, sub(b, p));
    Vec next = p;
    if (feasible(P, p, toward)) {
      next = add(p, mul(free_run(P, p, toward, std::min(step, r)), toward));
    } else {
      // Best tangent direction along the boundary edges through p.
      double best_gain = 0;
      Vec best_u{};
      double best_len = 0;
      for (std::size_t i = 0; i < P.n(); ++i) {
        if (seg_dist(p, P.a(i), P.b(i)) > kTol) continue;
        const Vec d = sub(P.b(i), P.a(i));
        const Vec e = mul(1 / norm(d), d);
        for (Vec u : {e, mul(-1, e)}) {
          const double gain = dot(u, sub(b, p));
          if (gain <= kTol || !feasible(P, p, u)) continue;
          if (gain > best_gain) {
            const Vec end = dot(u, e) > 0 ? P.b(i) : P.a(i);
            best_gain = gain;
            best_u = u;
            best_len = std::min({step, norm(sub(end, p)), gain});
          }
        }
      }
      if (best_gain <= 0 || best_len < kTol) break;
      next = add(p, mul(best_len, best_u));
    }
    if (r - distance(next, b) < 1e-12) break;
    p = next;
    out.push_back(p);
  }
  return out;
}

double directed_hausdorff(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  double worst = 0;
  for (const Vec& p : a) {
    double best = std::numeric_limits<double>::infinity();
    if (b.size() == 1) best = distance(p, b[0]);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) best = std::min(best, seg_dist(p, b[i], b[i + 1]));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace beacon::testing
