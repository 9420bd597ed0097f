#include "app/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "dsq/oracle.hpp"

namespace dsq::app {

SweepMethod parse_sweep_method(const std::string& text) {
  if (text == "analytic") return SweepMethod::analytic;
  if (text == "oracle") return SweepMethod::oracle;
  if (text == "both") return SweepMethod::both;
  throw Error(ErrorKind::invalid_argument, "unknown method '" + text + "' (analytic|oracle|both)");
}

std::string to_string(SweepMethod m) {
  switch (m) {
    case SweepMethod::analytic: return "analytic";
    case SweepMethod::oracle: return "oracle";
    case SweepMethod::both: return "both";
  }
  return "analytic";
}

void validate(const SweepSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxAnalyticN) {
    throw Error(ErrorKind::n_out_of_range, "N = " + std::to_string(spec.n) + " outside [2, 300]");
  }
  if (spec.k_list.empty()) throw Error(ErrorKind::k_out_of_range, "empty k list");
  for (int k : spec.k_list) {
    if (k < 1 || k > spec.n - 1) {
      throw Error(ErrorKind::k_out_of_range, "k = " + std::to_string(k) + " outside [1, N-1]");
    }
  }
  if (!(spec.a_start >= 0.0 && spec.a_start < spec.a_end && spec.a_end < 1.0)) {
    throw Error(ErrorKind::a_out_of_range, "need 0 <= a_start < a_end < 1");
  }
  if (spec.a_steps < 1) throw Error(ErrorKind::invalid_argument, "a_steps must be positive");
}

std::vector<double> a_grid(const SweepSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.a_steps));
  if (spec.a_steps == 1) {
    grid[0] = spec.a_start;
    return grid;
  }
  const double step = (spec.a_end - spec.a_start) / static_cast<double>(spec.a_steps - 1);
  for (int i = 0; i < spec.a_steps; ++i) grid[static_cast<std::size_t>(i)] = spec.a_start + step * i;
  grid.back() = spec.a_end;
  return grid;
}

std::vector<SqueezingReport> run_sweep(const SweepSpec& spec, unsigned workers,
                                       const analytic::EvalOptions& opts) {
  validate(spec);
  const auto grid = a_grid(spec);
  std::vector<DickeClassConfig> points;
  points.reserve(spec.k_list.size() * grid.size());
  for (int k : spec.k_list) {
    for (double a : grid) points.push_back({spec.n, k, a});
  }

  const std::size_t per_point = spec.method == SweepMethod::both ? 2 : 1;
  std::vector<SqueezingReport> rows(points.size() * per_point);
  const auto evaluate = [&](std::size_t i) {
    std::size_t slot = i * per_point;
    if (spec.method != SweepMethod::oracle) rows[slot++] = analytic::squeezing_parameter(points[i], opts);
    if (spec.method != SweepMethod::analytic) rows[slot] = oracle::squeezing_parameter_oracle(points[i]);
  };

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < points.size(); i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace dsq::app
