#pragma once

#include <optional>
#include <string>
#include <vector>

#include "app/svg_plot.hpp"
#include "app/sweep.hpp"

namespace dsq::app {

struct FigureSpec {
  std::string id;
  std::string title;
  SweepSpec sweep;
};

/// fig1a  N=8,   k = 1..4
/// fig1b  N=12,  k = 1..6
/// fig2a  N=105, k in {15, 90} (exchange partners, identical curves)
/// fig2b  N=105, k in {15, 35, 52}
/// fig3a  N=5,   k = 1
/// fig3b  N=6,   k = 3 (undefined at a = 0)
/// All use 200 points on [0, 0.995]. Returns nullopt for an unknown id.
std::optional<FigureSpec> figure_spec(const std::string& id);
std::vector<std::string> figure_ids();

struct FigureOutput {
  std::vector<SqueezingReport> rows;
  std::string svg;
};

FigureOutput build_figure(const FigureSpec& spec, unsigned workers = 0);

/// Companion CSV path: the SVG path with its extension replaced by .csv.
std::string companion_csv_path(const std::string& svg_path);

}  // namespace dsq::app
