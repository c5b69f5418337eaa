#pragma once

#include <string>
#include <vector>

namespace gaa {

struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string stroke = "#1f77b4";
  bool points = false;  // markers instead of a polyline
  bool dashed = false;
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  int width = 640;
  int height = 480;
};

/// Minimal standalone SVG document: frame, min/max tick labels, one polyline
/// or marker set per series. Non-finite samples are skipped.
std::string render_svg(const SvgPlot& plot);

}  // namespace gaa
