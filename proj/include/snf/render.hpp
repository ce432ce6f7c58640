#pragma once

// Standalone SVG drawings of configurations.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "snf/glp.hpp"

namespace snf {

struct RenderOptions {
  bool show_labels = false;
  bool show_classes = false;
  bool show_slices = false;
  std::optional<std::vector<std::size_t>> highlight_cycle;
  double scale = 60.0;   // pixels per unit
  double margin = 0.5;   // units
};

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string label_text(int label, int k) {
  if (k <= 26) return std::string(1, static_cast<char>('A' + label));
  return std::to_string(label);
}

}  // namespace detail

/// One polygon per cell, a dot per cell vertex, and optional labels, class
/// marks, slice axes and a highlighted cycle. A NoGLP verdict highlights its
/// witness unless a cycle is given explicitly.
inline std::string render_svg(const FractalSpec& spec, const Verdict* verdict = nullptr, const RenderOptions& options = {}) {
  if (!(options.scale > 0.0)) throw std::invalid_argument("render scale must be positive");
  const int k = spec.k();
  std::vector<std::vector<Point2>> polys;
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& c : spec.cells()) {
    polys.push_back(polygon(c));
    for (const auto& p : polys.back()) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const auto [sum, n] = global_barycenter(spec);
  const Point2 g0 = to_cartesian(sum);
  const Point2 centre{g0.x / static_cast<double>(n), g0.y / static_cast<double>(n)};

  const double s = options.scale;
  const double m = options.margin;
  auto X = [&](double x) { return detail::fixed6((x - minx + m) * s); };
  auto Y = [&](double y) { return detail::fixed6((maxy - y + m) * s); };
  const double width = (maxx - minx + 2 * m) * s;
  const double height = (maxy - miny + 2 * m) * s;

  std::optional<std::vector<std::size_t>> cycle = options.highlight_cycle;
  if (!cycle && verdict && !verdict->has_glp()) cycle = verdict->cycle();
  const Labeling* labeling = verdict && verdict->has_glp() ? &verdict->labeling() : nullptr;
  auto class_of = [&](std::size_t i) {
    const int r = labeling->offsets[i];
    return k % 2 == 0 ? (r == 0 ? 1 : 2) : r;
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fixed6(width) << "\" height=\""
     << detail::fixed6(height) << "\" viewBox=\"0 0 " << detail::fixed6(width) << ' ' << detail::fixed6(height) << "\">\n";

  if (options.show_slices) {
    double reach = 0.0;
    for (const auto& poly : polys)
      for (const auto& p : poly) reach = std::max(reach, std::hypot(p.x - centre.x, p.y - centre.y));
    os << "<g id=\"slices\" stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"6,4\">\n";
    for (int j = 0; j < k; ++j) {
      const double t = 2.0 * std::numbers::pi * j / k;
      os << "<line x1=\"" << X(centre.x) << "\" y1=\"" << Y(centre.y) << "\" x2=\"" << X(centre.x + reach * std::cos(t))
         << "\" y2=\"" << Y(centre.y + reach * std::sin(t)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"cells\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::string fill = "#d3d3d3";
    if (options.show_classes && labeling && k % 2 == 0) fill = class_of(i) == 1 ? "#b3cde3" : "#fbb4ae";
    os << "<polygon id=\"cell" << i << "\" fill=\"" << fill << "\" points=\"";
    for (std::size_t j = 0; j < polys[i].size(); ++j) os << (j ? " " : "") << X(polys[i][j].x) << ',' << Y(polys[i][j].y);
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (cycle && !cycle->empty()) {
    os << "<g id=\"cycle\" fill=\"none\" stroke=\"red\" stroke-width=\"3\">\n";
    for (auto i : *cycle) {
      os << "<polygon points=\"";
      const auto& poly = polys.at(i);
      for (std::size_t j = 0; j < poly.size(); ++j) os << (j ? " " : "") << X(poly[j].x) << ',' << Y(poly[j].y);
      os << "\"/>\n";
    }
    os << "<polygon points=\"";
    for (std::size_t q = 0; q < cycle->size(); ++q) {
      const auto c = to_cartesian(spec.cell((*cycle)[q]).barycenter);
      os << (q ? " " : "") << X(c.x) << ',' << Y(c.y);
    }
    os << "\"/>\n</g>\n";
  }

  os << "<g id=\"vertices\" fill=\"black\">\n";
  for (const auto& poly : polys)
    for (const auto& p : poly) os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"2.5\"/>\n";
  os << "</g>\n";

  if (options.show_classes && labeling) {
    os << "<g id=\"classes\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
    for (const auto& c : spec.cells()) {
      const auto p = to_cartesian(c.barycenter);
      os << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\">" << class_of(c.index) << "</text>\n";
    }
    os << "</g>\n";
  }

  if (options.show_labels && labeling) {
    os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#00008b\">\n";
    for (const auto& vl : labeling->labels) {
      const auto p = to_cartesian(vl.point);
      os << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" dx=\"4\" dy=\"-4\">" << detail::label_text(vl.label, k)
         << "</text>\n";
    }
    os << "</g>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace snf
