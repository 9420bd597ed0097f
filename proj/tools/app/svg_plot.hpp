#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dsq::app {

struct PlotPoint {
  double x = 0.0;
  std::optional<double> y;  // empty: undefined at this x
};

struct PlotSeries {
  std::string label;
  std::vector<PlotPoint> points;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0;
  double x_max = 1.0;
  std::optional<double> reference_y;
  std::vector<PlotSeries> series;
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 600;

/// Single-panel SVG 1.1 line chart on a fixed 800x600 viewport. Undefined
/// points break the polyline and are drawn as open markers on the x axis.
/// Output depends only on the plot contents.
std::string render_svg(const LinePlot& plot);

}  // namespace dsq::app
