// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"
#include "app/format.hpp"
#include "app/verify.hpp"

namespace app = dsq::app;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

Outcome from_suites(std::initializer_list<app::SuiteResult> suites) {
  Outcome o{true, {}};
  for (const auto& s : suites) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += s.name + " " + std::to_string(s.passed) + "/" + std::to_string(s.total);
    if (!s.ok()) {
      o.pass = false;
      if (!s.failures.empty()) o.detail += " first failure: " + s.failures.front();
    }
  }
  return o;
}

Outcome fig2b_emission() {
  const auto dir = fs::temp_directory_path() / "dsq_acceptance";
  fs::create_directories(dir);
  const auto svg_path = dir / "fig2b.svg";
  std::ostringstream out, err;
  const int code = app::cmd_figure("fig2b", svg_path.string(), out, err);
  if (code != 0) return {false, "figure fig2b exited " + std::to_string(code) + ": " + err.str()};

  std::ifstream csv(dir / "fig2b.csv");
  std::string line;
  std::getline(csv, line);
  std::size_t rows = 0;
  bool clean = true;
  while (std::getline(csv, line)) {
    ++rows;
    if (line.find("nan") != std::string::npos || line.find("inf") != std::string::npos ||
        line.find(",,") != std::string::npos) {
      clean = false;
    }
  }
  std::ifstream svg(svg_path);
  const std::string text{std::istreambuf_iterator<char>(svg), {}};
  clean = clean && text.find("nan") == std::string::npos && text.find("</svg>") != std::string::npos;
  fs::remove_all(dir);
  return {clean && rows == 600, std::to_string(rows) + " rows emitted, " + (clean ? "all finite" : "non-finite values")};
}

}  // namespace

int main() {
  const dsq::analytic::EvalOptions eval;
  const int kGridMaxN = 12;

  const std::vector<Criterion> criteria = {
      {"table concordance (Sx, Sz, S_n2^2 rows, rel 1e-12)", 1.0,
       [&] { return from_suites({app::suite_table_concordance(eval)}); }},
      {"oracle equivalence (analytic vs Dicke-basis xi, N<=12, 1e-10)", 10.0,
       [&] { return from_suites({app::suite_oracle_equivalence(kGridMaxN, eval)}); }},
      {"construction equivalence (2^N projection vs coefficients, N<=8, 1e-12)", 10.0,
       [&] { return from_suites({app::suite_construction_equivalence(8)}); }},
      {"exchange symmetry xi(N,k,a) = xi(N,N-k,a), 1e-10", 0.0,
       [&] { return from_suites({app::suite_exchange_symmetry(kGridMaxN, eval)}); }},
      {"Dicke non-squeezing at a=0 and N=3,k=2 spot value", 0.0,
       [&] { return from_suites({app::suite_dicke_limit(kGridMaxN, eval)}); }},
      {"squeezing exists (N=8,k=4) and N=2,k=1,a=0.6 xi = 0.7276", 0.0,
       [&] { return from_suites({app::suite_squeezing_exists(eval)}); }},
      {"N=105 ordering, k=52 lowest minimum; fig2b emitted cleanly", 5.0,
       [&] {
         auto order = from_suites({app::suite_fig2_ordering(eval)});
         const auto fig = fig2b_emission();
         return Outcome{order.pass && fig.pass, order.detail + "; " + fig.detail};
       }},
      {"structural zeros <Sy> = t12 = 0 within 1e-12", 0.0,
       [&] { return from_suites({app::suite_structural_zeros(kGridMaxN)}); }},
      {"minimum identification (eig = <S_n2^2> 1e-10, scan 1e-6)", 0.0,
       [&] { return from_suites({app::suite_minimum_identification(kGridMaxN, 3600, eval)}); }},
      {"monotonicity in k at N=8", 0.0, [&] { return from_suites({app::suite_monotonicity_in_k(eval)}); }},
      {"floating vs exact rational path, rel 1e-12", 0.0,
       [&] { return from_suites({app::suite_exact_cross_path(eval)}); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = app::format_fixed(secs, 3) + " s";
    if (c.time_limit_s > 0) {
      timing += " (limit " + app::format_fixed(c.time_limit_s, 0) + " s)";
      if (secs > c.time_limit_s) o.pass = false;
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s, %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(), timing.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
