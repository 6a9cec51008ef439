#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "moreau/function_io.hpp"
#include "moreau/vec2.hpp"

namespace moreau::svg {

struct Series {
  std::string label;
  std::vector<Vec2> points;  // data coordinates; non-finite points split the line
};

// Self-contained SVG chart. Polyline points are emitted in data coordinates
// inside a scaling group, so consumers can read the sampled values back
// verbatim; strokes use non-scaling width.
inline void write_chart(std::ostream& os, const std::vector<Series>& series,
                        const std::string& title) {
  static const char* kColors[] = {"#000000", "#d62728", "#2ca02c", "#1f77b4",
                                  "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  const double width = 800, height = 600, margin = 60;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
      if (first) {
        xmin = xmax = p.x;
        ymin = ymax = p.y;
        first = false;
      } else {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double sx = (width - 2 * margin) / (xmax - xmin);
  const double sy = (height - 2 * margin) / (ymax - ymin);
  const double tx = margin - xmin * sx;
  const double ty = height - margin + ymin * sy;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
     << title << "</text>\n";
  // axes
  os << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
     << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"#444\"/>\n";
  os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
     << "\" y2=\"" << height - margin << "\" stroke=\"#444\"/>\n";
  os << "  <text x=\"" << margin << "\" y=\"" << height - margin + 18
     << "\" font-size=\"11\">" << format_short(xmin) << "</text>\n";
  os << "  <text x=\"" << width - margin << "\" y=\"" << height - margin + 18
     << "\" text-anchor=\"end\" font-size=\"11\">" << format_short(xmax) << "</text>\n";
  os << "  <text x=\"" << margin - 4 << "\" y=\"" << height - margin
     << "\" text-anchor=\"end\" font-size=\"11\">" << format_short(ymin) << "</text>\n";
  os << "  <text x=\"" << margin - 4 << "\" y=\"" << margin + 4
     << "\" text-anchor=\"end\" font-size=\"11\">" << format_short(ymax) << "</text>\n";

  os << "  <g transform=\"translate(" << tx << "," << ty << ") scale(" << sx << ",-" << sy
     << ")\">\n";
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    std::string pts;
    auto flush = [&]() {
      if (!pts.empty()) {
        os << "    <polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"" << pts
           << "\"/>\n";
        pts.clear();
      }
    };
    for (const auto& p : series[si].points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += format_roundtrip(p.x);
      pts += ',';
      pts += format_roundtrip(p.y);
    }
    flush();
  }
  os << "  </g>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    double y = margin + 16.0 * static_cast<double>(si);
    os << "  <rect x=\"" << width - margin - 150 << "\" y=\"" << y - 9
       << "\" width=\"12\" height=\"3\" fill=\"" << color << "\"/>\n";
    os << "  <text x=\"" << width - margin - 132 << "\" y=\"" << y
       << "\" font-size=\"12\">" << series[si].label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace moreau::svg
