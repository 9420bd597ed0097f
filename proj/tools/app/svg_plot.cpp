#include "app/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "app/format.hpp"

namespace dsq::app {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

constexpr std::array<const char*, 8> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
};

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

std::string f2(double v) { return format_fixed(v, 2); }

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_svg(const LinePlot& plot) {
  const double plot_w = kSvgWidth - kLeft - kRight;
  const double plot_h = kSvgHeight - kTop - kBottom;

  double y_hi = plot.reference_y.value_or(0.0);
  for (const auto& s : plot.series) {
    for (const auto& p : s.points) {
      if (p.y && std::isfinite(*p.y)) y_hi = std::max(y_hi, *p.y);
    }
  }
  if (y_hi <= 0.0) y_hi = 1.0;
  const double y_step = nice_step(y_hi, 6);
  y_hi = std::ceil(y_hi * 1.05 / y_step) * y_step;
  const double y_lo = 0.0;
  const double x_span = plot.x_max > plot.x_min ? plot.x_max - plot.x_min : 1.0;

  const auto px = [&](double x) { return kLeft + (x - plot.x_min) / x_span * plot_w; };
  const auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSvgWidth
      << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << f2(kLeft + plot_w / 2) << "\" y=\"30.00\" font-family=\"sans-serif\" "
      << "font-size=\"18\" text-anchor=\"middle\">" << escape(plot.title) << "</text>\n";

  // Axes and ticks.
  svg << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<rect x=\"" << f2(kLeft) << "\" y=\"" << f2(kTop) << "\" width=\"" << f2(plot_w)
      << "\" height=\"" << f2(plot_h) << "\"/>\n";
  const double x_step = nice_step(x_span, 5);
  for (double x = std::ceil(plot.x_min / x_step) * x_step; x <= plot.x_max + 1e-9; x += x_step) {
    svg << "<line x1=\"" << f2(px(x)) << "\" y1=\"" << f2(kTop + plot_h) << "\" x2=\"" << f2(px(x))
        << "\" y2=\"" << f2(kTop + plot_h + 6) << "\"/>\n";
  }
  for (double y = y_lo; y <= y_hi + 1e-9; y += y_step) {
    svg << "<line x1=\"" << f2(kLeft - 6) << "\" y1=\"" << f2(py(y)) << "\" x2=\"" << f2(kLeft)
        << "\" y2=\"" << f2(py(y)) << "\"/>\n";
  }
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double x = std::ceil(plot.x_min / x_step) * x_step; x <= plot.x_max + 1e-9; x += x_step) {
    svg << "<text x=\"" << f2(px(x)) << "\" y=\"" << f2(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << format_fixed(x, 1) << "</text>\n";
  }
  for (double y = y_lo; y <= y_hi + 1e-9; y += y_step) {
    svg << "<text x=\"" << f2(kLeft - 10) << "\" y=\"" << f2(py(y) + 4) << "\" text-anchor=\"end\">"
        << format_fixed(y, y_step < 1.0 ? 1 : 0) << "</text>\n";
  }
  svg << "<text x=\"" << f2(kLeft + plot_w / 2) << "\" y=\"" << f2(kSvgHeight - 20.0)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(plot.x_label) << "</text>\n"
      << "<text x=\"20.00\" y=\"" << f2(kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"14\" "
      << "transform=\"rotate(-90 20.00 " << f2(kTop + plot_h / 2) << ")\">" << escape(plot.y_label)
      << "</text>\n</g>\n";

  if (plot.reference_y) {
    svg << "<line x1=\"" << f2(kLeft) << "\" y1=\"" << f2(py(*plot.reference_y)) << "\" x2=\""
        << f2(kLeft + plot_w) << "\" y2=\"" << f2(py(*plot.reference_y))
        << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }

  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    const auto& s = plot.series[si];
    const char* color = kPalette[si % kPalette.size()];
    std::string pts;
    const auto flush = [&] {
      if (!pts.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"" << pts
            << "\"/>\n";
        pts.clear();
      }
    };
    for (const auto& p : s.points) {
      if (!p.y || !std::isfinite(*p.y)) {
        flush();
        svg << "<circle cx=\"" << f2(px(p.x)) << "\" cy=\"" << f2(kTop + plot_h) << "\" r=\"5\" fill=\"none\" "
            << "stroke=\"" << color << "\" stroke-width=\"2\"><title>undefined mean spin</title></circle>\n";
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += f2(px(p.x)) + ',' + f2(py(std::min(*p.y, y_hi)));
    }
    flush();

    const double ly = kTop + 20.0 + 22.0 * static_cast<double>(si);
    const double lx = kLeft + plot_w + 15.0;
    svg << "<line x1=\"" << f2(lx) << "\" y1=\"" << f2(ly) << "\" x2=\"" << f2(lx + 25) << "\" y2=\"" << f2(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << f2(lx + 32) << "\" y=\"" << f2(ly + 4) << "\" font-family=\"sans-serif\" "
        << "font-size=\"13\">" << escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dsq::app
