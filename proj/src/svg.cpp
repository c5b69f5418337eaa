#include "gaa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gaa {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Bounds {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;

  void add(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  void pad() {
    if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  }
};

}  // namespace

std::string render_svg(const SvgPlot& plot) {
  constexpr double left = 70, right = 20, top = 40, bottom = 50;
  const double w = plot.width, h = plot.height;
  const double pw = w - left - right, ph = h - top - bottom;

  Bounds bb;
  for (const auto& s : plot.series)
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) bb.add(s.x[i], s.y[i]);
  bb.pad();

  auto px = [&](double x) { return left + (x - bb.x0) / (bb.x1 - bb.x0) * pw; };
  auto py = [&](double y) { return top + (bb.y1 - y) / (bb.y1 - bb.y0) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
     << escape(plot.title) << "</text>\n";
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 10
     << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(plot.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
     << "transform=\"rotate(-90 16 " << top + ph / 2 << ")\">" << escape(plot.y_label)
     << "</text>\n";
  // Axis extremes only.
  os << "<text x=\"" << left << "\" y=\"" << top + ph + 16 << "\" font-size=\"11\">"
     << num(bb.x0) << "</text>\n";
  os << "<text x=\"" << left + pw << "\" y=\"" << top + ph + 16
     << "\" text-anchor=\"end\" font-size=\"11\">" << num(bb.x1) << "</text>\n";
  os << "<text x=\"" << left - 4 << "\" y=\"" << top + ph << "\" text-anchor=\"end\" "
     << "font-size=\"11\">" << num(bb.y0) << "</text>\n";
  os << "<text x=\"" << left - 4 << "\" y=\"" << top + 10 << "\" text-anchor=\"end\" "
     << "font-size=\"11\">" << num(bb.y1) << "</text>\n";

  for (const auto& s : plot.series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.points) {
      for (std::size_t i = 0; i < n; ++i)
        if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
          os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
             << "\" r=\"2.5\" fill=\"" << s.stroke << "\"/>\n";
      continue;
    }
    // Break the polyline at non-finite samples.
    std::string pts;
    auto flush = [&] {
      if (!pts.empty())
        os << "<polyline fill=\"none\" stroke=\"" << s.stroke << "\" stroke-width=\"1.5\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"" << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += num(px(s.x[i])) + ',' + num(py(s.y[i]));
    }
    flush();
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gaa
