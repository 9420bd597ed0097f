#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsq/analytic.hpp"

namespace dsq::app {

/// |x - y| <= tol * max(|x|, |y|); two exact zeros compare equal.
bool close_rel(double x, double y, double tol);

struct VerifyOptions {
  int max_n = 10;
  bool tables_only = false;
  int scan_steps = 3600;
  analytic::EvalOptions eval;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool pass, const std::string& what);
};

// Each suite counts one check per configuration (per table row for the
// concordance suite).
SuiteResult suite_table_concordance(const analytic::EvalOptions& eval);
SuiteResult suite_oracle_equivalence(int max_n, const analytic::EvalOptions& eval);
SuiteResult suite_construction_equivalence(int max_n);
SuiteResult suite_exchange_symmetry(int max_n, const analytic::EvalOptions& eval);
SuiteResult suite_monotonicity_in_k(const analytic::EvalOptions& eval);
SuiteResult suite_dicke_limit(int max_n, const analytic::EvalOptions& eval);
SuiteResult suite_structural_zeros(int max_n);
SuiteResult suite_minimum_identification(int max_n, int scan_steps, const analytic::EvalOptions& eval);
SuiteResult suite_operator_algebra(int max_n);
SuiteResult suite_coherent_calibration(int max_n);
SuiteResult suite_exact_cross_path(const analytic::EvalOptions& eval);
SuiteResult suite_squeezing_exists(const analytic::EvalOptions& eval);
SuiteResult suite_fig2_ordering(const analytic::EvalOptions& eval);

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

/// The a values shared by the grid suites: 0.05 j for j = 1..19.
std::vector<double> oracle_grid_a();

}  // namespace dsq::app
