#include "beacon/service/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace beacon {

namespace {

const std::map<std::string, std::string> kAnnotationFills{
    {"core", "#9ecae1"},
    {"hook_left", "#6baed6"},
    {"hook_right", "#4292c6"},
    {"pocket_w1", "#fdd0a2"},
    {"pocket_w2", "#fdae6b"},
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string zone_colour(std::size_t k) {
  // Hues spread by the golden angle; two lightness bands keep neighbours apart.
  const double h = std::fmod(k * 137.508, 360.0);
  const double l = k % 2 ? 0.62 : 0.75, s = 0.65;
  const double c = (1 - std::abs(2 * l - 1)) * s;
  const double x = c * (1 - std::abs(std::fmod(h / 60.0, 2.0) - 1));
  const double m = l - c / 2;
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h / 60) % 6) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    default: r = c, b = x; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

std::string export_svg(const Instance& inst, const SvgOptions& options) {
  const auto [lo, hi] = inst.polygon.bounds();
  const double pad = 1, k = options.scale;
  const double x0 = lo.x.to_double() - pad, y1 = hi.y.to_double() + pad;
  const double w = (hi.x - lo.x).to_double() + 2 * pad, h = (hi.y - lo.y).to_double() + 2 * pad;
  auto px = [&](const Scalar& x) { return num((x.to_double() - x0) * k); };
  auto py = [&](const Scalar& y) { return num((y1 - y.to_double()) * k); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * k) << "\" height=\"" << num(h * k)
      << "\" viewBox=\"0 0 " << num(w * k) << ' ' << num(h * k) << "\">\n";
  out << "<title>" << inst.name << "</title>\n";

  out << "<path class=\"polygon\" fill=\"#f2f2f2\" stroke=\"#222\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < inst.polygon.size(); ++i) {
    const Point& v = inst.polygon.vertex(i);
    out << (i ? " L" : "M") << px(v.x) << ',' << py(v.y);
  }
  out << " Z\"/>\n";

  auto square = [&](long x, long y, const std::string& cls, const std::string& fill, const std::string& extra) {
    out << "<rect class=\"" << cls << "\"" << extra << " x=\"" << px(Scalar(x)) << "\" y=\"" << py(Scalar(y + 1))
        << "\" width=\"" << num(k) << "\" height=\"" << num(k) << "\" fill=\"" << fill << "\"/>\n";
  };
  for (const auto& [name, fill] : kAnnotationFills) {
    const auto it = inst.annotations.find(name);
    if (it == inst.annotations.end()) continue;
    for (const auto& [x, y] : it->second) square(x, y, "annotation", fill, " data-name=\"" + name + "\"");
  }

  if (options.labels) {
    std::size_t idx = 0;
    for (const auto& [label, face] : options.labels->faces) {
      const std::string fill = zone_colour(idx++);
      square(face.x, face.y, "zone", fill, " data-label=\"" + label + "\"");
      out << "<text class=\"zone-label\" x=\"" << num((face.x + 0.5 - x0) * k) << "\" y=\""
          << num((y1 - face.y - 0.5) * k + 4) << "\" font-size=\"" << num(k * 0.5)
          << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
  }

  const Point& ball = options.state ? options.state->ball : inst.ball;
  const Point& beacon = options.state ? options.state->beacon : inst.beacon;
  out << "<circle class=\"ball\" cx=\"" << px(ball.x) << "\" cy=\"" << py(ball.y) << "\" r=\"" << num(k * 0.22)
      << "\" fill=\"#888888\"/>\n";
  out << "<circle class=\"beacon\" cx=\"" << px(beacon.x) << "\" cy=\"" << py(beacon.y) << "\" r=\""
      << num(k * 0.22) << "\" fill=\"#ff8c00\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace beacon
