#include "pedoe/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "pedoe/error.hpp"

namespace pedoe::cli {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  bool empty() const { return x0 > x1; }
  void include(double x, double y, double r) {
    x0 = std::min(x0, x - r);
    y0 = std::min(y0, y - r);
    x1 = std::max(x1, x + r);
    y1 = std::max(y1, y + r);
  }
};

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Portion of the line normal . x = offset inside the box.
std::optional<std::array<double, 4>> clip(const Hyperplane& h, const Box& b) {
  const double nx = h.normal()[0];
  const double ny = h.normal()[1];
  const std::array<double, 2> p{h.offset() * nx, h.offset() * ny};
  const std::array<double, 2> d{-ny, nx};
  const std::array<double, 2> lo{b.x0, b.y0};
  const std::array<double, 2> hi{b.x1, b.y1};
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i) {
    if (std::abs(d[i]) < 1e-15) {
      if (p[i] < lo[i] || p[i] > hi[i]) return std::nullopt;
      continue;
    }
    double a = (lo[i] - p[i]) / d[i];
    double c = (hi[i] - p[i]) / d[i];
    if (a > c) std::swap(a, c);
    t0 = std::max(t0, a);
    t1 = std::min(t1, c);
  }
  if (!(t0 < t1)) return std::nullopt;
  return std::array<double, 4>{p[0] + t0 * d[0], p[1] + t0 * d[1], p[0] + t1 * d[0], p[1] + t1 * d[1]};
}

void draw(std::ostringstream& out, const GeneralizedSphere& s, const Box& box, double dot) {
  if (const auto* sp = std::get_if<Sphere>(&s)) {
    out << "    <circle cx=\"" << num(sp->center()[0]) << "\" cy=\"" << num(-sp->center()[1]) << "\" r=\""
        << num(std::abs(sp->radius())) << "\"/>\n";
  } else if (const auto* h = std::get_if<Hyperplane>(&s)) {
    if (const auto seg = clip(*h, box)) {
      const auto& [xa, ya, xb, yb] = *seg;
      out << "    <line x1=\"" << num(xa) << "\" y1=\"" << num(-ya) << "\" x2=\"" << num(xb) << "\" y2=\""
          << num(-yb) << "\"/>\n";
    }
  } else {
    const auto& p = std::get<PointShape>(s).location();
    out << "    <circle cx=\"" << num(p[0]) << "\" cy=\"" << num(-p[1]) << "\" r=\"" << num(dot)
        << "\" fill=\"currentColor\"/>\n";
  }
}

}  // namespace

std::string render_svg(std::span<const GeneralizedSphere> knowns, std::span<const GeneralizedSphere> solutions,
                       double width) {
  if (!(width > 0.0)) throw Error(ErrorKind::InvalidInput, "width must be positive");
  Box box;
  for (auto group : {knowns, solutions}) {
    for (const auto& s : group) {
      if (dimension(s) != 2) throw Error(ErrorKind::Unsupported, "only planar configurations can be rendered");
      if (const auto* sp = std::get_if<Sphere>(&s)) {
        box.include(sp->center()[0], sp->center()[1], std::abs(sp->radius()));
      } else if (const auto* p = std::get_if<PointShape>(&s)) {
        box.include(p->location()[0], p->location()[1], 0.0);
      }
    }
  }
  if (box.empty()) box.include(0.0, 0.0, 1.0);
  double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  if (span == 0.0) span = 2.0;
  const double pad = 0.05 * span;
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;

  const double vw = box.x1 - box.x0;
  const double vh = box.y1 - box.y0;
  const double stroke = 0.003 * std::max(vw, vh);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(width * vh / vw) << "\" viewBox=\"" << num(box.x0) << " " << num(-box.y1) << " " << num(vw) << " "
      << num(vh) << "\">\n";
  out << "  <g fill=\"none\" stroke=\"#1f2933\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const auto& s : knowns) draw(out, s, box, 2 * stroke);
  out << "  </g>\n";
  out << "  <g fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\""
      << num(4 * stroke) << " " << num(2 * stroke) << "\">\n";
  for (const auto& s : solutions) draw(out, s, box, 2 * stroke);
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace pedoe::cli
