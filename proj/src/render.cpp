#include "spanlines/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

namespace spanlines {

namespace {

struct Vec2 {
  double x;
  double y;
};

FieldElement dot(const std::array<long, 3>& f, const ProjectivePoint& p) {
  const Field& field = p.field();
  FieldElement sum = FieldElement::zero(field);
  for (std::size_t i = 0; i < 3; ++i) {
    if (f[i] != 0) sum += field.from_integer(f[i]) * p[i];
  }
  return sum;
}

std::vector<std::array<long, 3>> chart_candidates() {
  std::vector<std::array<long, 3>> out = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b, const std::array<long, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Liang-Barsky clip of the infinite line through p with direction d.
std::optional<std::pair<Vec2, Vec2>> clip(Vec2 p, Vec2 d, double x0, double y0, double x1, double y1) {
  double lo = -1e300;
  double hi = 1e300;
  const std::array<std::pair<double, double>, 4> sides = {
      std::pair{-d.x, p.x - x0}, {d.x, x1 - p.x}, {-d.y, p.y - y0}, {d.y, y1 - p.y}};
  for (const auto& [denominator, numerator] : sides) {
    if (denominator == 0.0) {
      if (numerator < 0.0) return std::nullopt;
      continue;
    }
    const double t = numerator / denominator;
    if (denominator < 0.0) {
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::pair{Vec2{p.x + lo * d.x, p.y + lo * d.y}, Vec2{p.x + hi * d.x, p.y + hi * d.y}};
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Configuration& config, const LineMap& lines) {
  if (!config.is_real()) {
    throw RenderError("configuration has non-real coordinates and cannot be drawn in the real plane (" +
                      config.field().to_string() + ")");
  }
  const auto& points = config.points();

  std::optional<std::array<long, 3>> chart;
  for (const auto& f : chart_candidates()) {
    if (std::all_of(points.begin(), points.end(), [&](const auto& p) { return !dot(f, p).is_zero(); })) {
      chart = f;
      break;
    }
  }
  if (!chart) throw RenderError("no affine chart among the candidates contains every point");

  const std::array<std::array<long, 3>, 3> units = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::array<long, 3> g{};
  std::array<long, 3> h{};
  bool basis = false;
  for (std::size_t i = 0; i < 3 && !basis; ++i) {
    for (std::size_t j = i + 1; j < 3 && !basis; ++j) {
      if (det3(*chart, units[i], units[j]) != 0) {
        g = units[i];
        h = units[j];
        basis = true;
      }
    }
  }

  std::vector<Vec2> xy;
  xy.reserve(points.size());
  for (const auto& p : points) {
    const FieldElement w = dot(*chart, p).inv();
    xy.push_back({approximate(dot(g, p) * w).first, approximate(dot(h, p) * w).first});
  }

  double min_x = xy[0].x, max_x = xy[0].x, min_y = xy[0].y, max_y = xy[0].y;
  for (const auto& v : xy) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  double width = max_x - min_x;
  double height = max_y - min_y;
  const double extent = std::max({width, height, 1e-9});
  if (width <= 0.0) width = extent;
  if (height <= 0.0) height = extent;
  const double x0 = min_x - 0.1 * width, x1 = max_x + 0.1 * width;
  const double y0 = min_y - 0.1 * height, y1 = max_y + 0.1 * height;

  constexpr double kCanvas = 800.0;
  const double scale = kCanvas / std::max(x1 - x0, y1 - y0);
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return (y1 - y) * scale; };
  const double canvas_w = (x1 - x0) * scale;
  const double canvas_h = (y1 - y0) * scale;

  std::ostringstream svg;
  svg.precision(6);
  svg << std::fixed;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_w << "\" height=\"" << canvas_h
      << "\" viewBox=\"0 0 " << canvas_w << ' ' << canvas_h << "\">\n";
  svg << "  <title>" << xml_escape(config.label()) << " (" << points.size() << " points, " << lines.size()
      << " spanned lines)</title>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <g id=\"lines\" stroke=\"#4a6fa5\" stroke-width=\"1\" stroke-opacity=\"0.6\">\n";
  for (const auto& line : lines) {
    const Vec2 a = xy[line.members[0]];
    const Vec2 b = xy[line.members[1]];
    const auto segment = clip(a, {b.x - a.x, b.y - a.y}, x0, y0, x1, y1);
    if (!segment) continue;
    svg << "    <line class=\"spanned-line\" data-points=\"" << line.members.size() << "\" x1=\""
        << sx(segment->first.x) << "\" y1=\"" << sy(segment->first.y) << "\" x2=\"" << sx(segment->second.x)
        << "\" y2=\"" << sy(segment->second.y) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g id=\"points\" fill=\"#c0392b\">\n";
  for (std::size_t i = 0; i < xy.size(); ++i) {
    svg << "    <circle class=\"point\" data-index=\"" << i << "\" cx=\"" << sx(xy[i].x) << "\" cy=\""
        << sy(xy[i].y) << "\" r=\"4\"/>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace spanlines
