#include "app/figures.hpp"

#include <filesystem>

namespace dsq::app {

namespace {

FigureSpec make(std::string id, std::string title, int n, std::vector<int> ks) {
  SweepSpec sweep;
  sweep.n = n;
  sweep.k_list = std::move(ks);
  sweep.a_start = 0.0;
  sweep.a_end = 0.995;
  sweep.a_steps = 200;
  sweep.method = SweepMethod::analytic;
  return {std::move(id), std::move(title), std::move(sweep)};
}

}  // namespace

std::vector<std::string> figure_ids() { return {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b"}; }

std::optional<FigureSpec> figure_spec(const std::string& id) {
  if (id == "fig1a") return make(id, "xi vs a, N = 8", 8, {1, 2, 3, 4});
  if (id == "fig1b") return make(id, "xi vs a, N = 12", 12, {1, 2, 3, 4, 5, 6});
  if (id == "fig2a") return make(id, "xi vs a, N = 105, exchange partners", 105, {15, 90});
  if (id == "fig2b") return make(id, "xi vs a, N = 105", 105, {15, 35, 52});
  if (id == "fig3a") return make(id, "xi vs a, N = 5, k = 1", 5, {1});
  if (id == "fig3b") return make(id, "xi vs a, N = 6, k = 3", 6, {3});
  return std::nullopt;
}

FigureOutput build_figure(const FigureSpec& spec, unsigned workers) {
  FigureOutput out;
  out.rows = run_sweep(spec.sweep, workers);

  LinePlot plot;
  plot.title = spec.title;
  plot.x_label = "a";
  plot.y_label = "xi";
  plot.x_min = 0.0;
  plot.x_max = 1.0;
  plot.reference_y = 1.0;
  for (int k : spec.sweep.k_list) {
    PlotSeries s;
    s.label = "k = " + std::to_string(k);
    for (const auto& r : out.rows) {
      if (r.config.k == k) s.points.push_back({r.config.a, r.xi});
    }
    plot.series.push_back(std::move(s));
  }
  out.svg = render_svg(plot);
  return out;
}

std::string companion_csv_path(const std::string& svg_path) {
  std::filesystem::path p(svg_path);
  p.replace_extension(".csv");
  return p.string();
}

}  // namespace dsq::app
