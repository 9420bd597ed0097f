#pragma once

#include <string>
#include <vector>

#include "dsq/analytic.hpp"
#include "dsq/state_model.hpp"

namespace dsq::app {

enum class SweepMethod { analytic, oracle, both };

SweepMethod parse_sweep_method(const std::string& text);
std::string to_string(SweepMethod m);

struct SweepSpec {
  int n = 8;
  std::vector<int> k_list{1};
  double a_start = 0.0;
  double a_end = 0.995;
  int a_steps = 200;
  SweepMethod method = SweepMethod::analytic;
};

/// Throws dsq::Error for out-of-range fields.
void validate(const SweepSpec& spec);

/// a_start + i (a_end - a_start) / (a_steps - 1), i = 0..a_steps-1.
std::vector<double> a_grid(const SweepSpec& spec);

/// One report per (k, a) point, k blocks in k_list order, a ascending inside
/// each block. With method = both an analytic row is followed by its oracle
/// row. Points are evaluated on up to `workers` threads (0 = hardware
/// concurrency); the output order never depends on scheduling.
std::vector<SqueezingReport> run_sweep(const SweepSpec& spec, unsigned workers = 0,
                                       const analytic::EvalOptions& opts = {});

}  // namespace dsq::app
