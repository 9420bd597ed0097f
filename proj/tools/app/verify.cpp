#include "app/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "app/format.hpp"
#include "app/golden_tables.hpp"
#include "app/sweep.hpp"
#include "dsq/exact.hpp"
#include "dsq/oracle.hpp"

namespace dsq::app {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

std::string cfg_text(int n, int k, double a) {
  return "N=" + std::to_string(n) + " k=" + std::to_string(k) + " a=" + format_sig17(a);
}

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<double>& table_grid() {
  static const std::vector<double> g{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
  return g;
}

bool mean_spin_null_at(int n, int k, double a) { return a == 0.0 && 2 * k == n; }

}  // namespace

bool close_rel(double x, double y, double tol) {
  if (x == y) return true;
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

void SuiteResult::record(bool pass, const std::string& what) {
  ++total;
  if (pass) {
    ++passed;
  } else if (failures.size() < kMaxReportedFailures) {
    failures.push_back(what);
  }
}

std::vector<double> oracle_grid_a() {
  std::vector<double> g;
  for (int j = 1; j <= 19; ++j) g.push_back(0.05 * j);
  return g;
}

SuiteResult suite_table_concordance(const analytic::EvalOptions& eval) {
  constexpr double tol = 1e-12;
  return timed("table_concordance", [&](SuiteResult& r) {
    const auto mean_rows = [&](const std::vector<golden::MeanSpinRow>& rows, bool is_sx, const char* label) {
      for (const auto& row : rows) {
        bool ok = true;
        std::string where;
        for (double a : table_grid()) {
          const auto exp = analytic::mean_spin({row.n, row.k, a}, eval);
          const double got = is_sx ? exp.sx : exp.sz;
          if (!close_rel(got, row.value(a), tol)) {
            ok = false;
            where = cfg_text(row.n, row.k, a);
            break;
          }
        }
        r.record(ok, std::string(label) + " row " + where);
      }
    };
    mean_rows(golden::sx_rows(), true, "<Sx>");
    mean_rows(golden::sz_rows(), false, "<Sz>");
    for (const auto& row : golden::variance_rows()) {
      bool ok = true;
      std::string where;
      for (double a : table_grid()) {
        if (mean_spin_null_at(row.n, row.k, a)) continue;
        const DickeClassConfig cfg{row.n, row.k, a};
        const auto exp = analytic::mean_spin(cfg, eval);
        const auto m = analytic::frame_coefficients(exp, a, row.n);
        if (!close_rel(analytic::perp_variance_min(cfg, eval), row.value(a, m), tol)) {
          ok = false;
          where = cfg_text(row.n, row.k, a);
          break;
        }
      }
      r.record(ok, "<S_n2^2> row " + where);
    }
  });
}

SuiteResult suite_oracle_equivalence(int max_n, const analytic::EvalOptions& eval) {
  return timed("oracle_equivalence", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        for (double a : oracle_grid_a()) {
          const DickeClassConfig cfg{n, k, a};
          const auto an = analytic::squeezing_parameter(cfg, eval);
          const auto orc = oracle::squeezing_parameter_oracle(cfg);
          const bool ok = an.xi && orc.xi && std::abs(*an.xi - *orc.xi) <= 1e-10;
          r.record(ok, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_construction_equivalence(int max_n) {
  return timed("construction_equivalence", [&](SuiteResult& r) {
    const int top = std::min(max_n, kMaxFullHilbertN);
    for (int n = 2; n <= top; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (double a : {0.0, 0.25, 0.5, 0.75, 0.9}) {
          const DickeClassConfig cfg{n, k, a};
          const auto full = oracle::full_hilbert_state(cfg);
          const auto projected = oracle::project_to_dicke(full);
          const auto direct = oracle::dicke_coefficients(cfg);
          double worst = 0.0;
          for (std::size_t j = 0; j < direct.coefficients.size(); ++j) {
            worst = std::max(worst, std::abs(projected.coefficients[j] - direct.coefficients[j]));
          }
          const bool ok = worst <= 1e-12 && oracle::is_permutation_symmetric(full, 1e-12);
          r.record(ok, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_exchange_symmetry(int max_n, const analytic::EvalOptions& eval) {
  return timed("exchange_symmetry", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        for (double a : oracle_grid_a()) {
          const auto lhs = analytic::squeezing_parameter({n, k, a}, eval);
          const auto rhs = analytic::squeezing_parameter({n, n - k, a}, eval);
          r.record(lhs.xi && rhs.xi && std::abs(*lhs.xi - *rhs.xi) <= 1e-10, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_monotonicity_in_k(const analytic::EvalOptions& eval) {
  return timed("monotonicity_in_k", [&](SuiteResult& r) {
    for (int j = 1; j <= 9; ++j) {
      const double a = 0.1 * j;
      bool ok = true;
      double prev = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= 4; ++k) {
        const auto rep = analytic::squeezing_parameter({8, k, a}, eval);
        if (!rep.xi || *rep.xi > prev) ok = false;
        if (rep.xi) prev = *rep.xi;
      }
      r.record(ok, "N=8 a=" + format_sig17(a));
    }
  });
}

SuiteResult suite_dicke_limit(int max_n, const analytic::EvalOptions& eval) {
  return timed("dicke_limit", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        const auto rep = analytic::squeezing_parameter({n, k, 0.0}, eval);
        if (2 * k == n) {
          r.record(rep.verdict == Verdict::undefined_mean_spin, cfg_text(n, k, 0.0) + " expected undefined");
        } else {
          r.record(rep.xi && *rep.xi >= 1.0, cfg_text(n, k, 0.0));
        }
      }
    }
    const auto spot = analytic::squeezing_parameter({3, 2, 0.0}, eval);
    r.record(spot.xi && std::abs(*spot.xi - 2.0 * std::sqrt(7.0 / 12.0)) <= 1e-12, "N=3 k=2 a=0 spot value");
  });
}

SuiteResult suite_structural_zeros(int max_n) {
  return timed("structural_zeros", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        for (double a : oracle_grid_a()) {
          const auto state = oracle::dicke_coefficients({n, k, a});
          const auto mean = oracle::mean_spin(state);
          const auto t = oracle::t_matrix(state, analytic::frame(mean, n));
          r.record(std::abs(mean.sy) <= 1e-12 && std::abs(t.t12) <= 1e-12, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_minimum_identification(int max_n, int scan_steps, const analytic::EvalOptions& eval) {
  return timed("minimum_identification", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 1; k < n; ++k) {
        for (double a : oracle_grid_a()) {
          const DickeClassConfig cfg{n, k, a};
          const auto state = oracle::dicke_coefficients(cfg);
          const auto frame = analytic::frame(oracle::mean_spin(state), n);
          const auto t = oracle::t_matrix(state, frame);
          const auto eig = oracle::min_perp_variance_eig(t);
          const double scan = oracle::min_perp_variance_scan(state, frame, scan_steps);
          const double closed = analytic::perp_variance_min(cfg, eval);
          const bool ok = t.t22 <= t.t11 + 1e-12 && std::abs(eig.variance - t.t22) <= 1e-10 &&
                          std::abs(closed - eig.variance) <= 1e-10 && std::abs(scan - eig.variance) <= 1e-6;
          r.record(ok, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_operator_algebra(int max_n) {
  return timed("operator_algebra", [&](SuiteResult& r) {
    const int top = std::max(max_n, 50);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int n = 1; n <= top; ++n) {
      const auto sx = oracle::collective_operator(n, {1, 0, 0}).matrix;
      const auto sy = oracle::collective_operator(n, {0, 1, 0}).matrix;
      const auto sz = oracle::collective_operator(n, {0, 0, 1}).matrix;
      const double s = 0.5 * n;
      const auto dim = static_cast<Eigen::Index>(n + 1);
      const Eigen::MatrixXcd casimir = sx * sx + sy * sy + sz * sz - s * (s + 1) * Eigen::MatrixXcd::Identity(dim, dim);
      const double err = std::max({
          (sx * sy - sy * sx - i_unit * sz).cwiseAbs().maxCoeff(),
          (sy * sz - sz * sy - i_unit * sx).cwiseAbs().maxCoeff(),
          (sz * sx - sx * sz - i_unit * sy).cwiseAbs().maxCoeff(),
          casimir.cwiseAbs().maxCoeff(),
          (sx - sx.adjoint()).cwiseAbs().maxCoeff(),
          (sy - sy.adjoint()).cwiseAbs().maxCoeff(),
      });
      r.record(err <= 1e-10, "N=" + std::to_string(n));
    }
  });
}

SuiteResult suite_coherent_calibration(int max_n) {
  return timed("coherent_calibration", [&](SuiteResult& r) {
    for (int n = 2; n <= max_n; ++n) {
      for (double a : {0.0, 0.3, 0.7}) {
        const auto rep = oracle::squeezing_parameter_oracle({n, n, a});
        const bool ok = rep.xi && std::abs(rep.perp_variance_min - 0.25 * n) <= 1e-12 * n &&
                        std::abs(*rep.xi - 1.0) <= 1e-12;
        r.record(ok, cfg_text(n, n, a));
      }
    }
  });
}

SuiteResult suite_exact_cross_path(const analytic::EvalOptions& eval) {
  return timed("exact_cross_path", [&](SuiteResult& r) {
    const std::vector<ExactRational> ratios{ExactRational(1, 4), ExactRational(1, 2), ExactRational(3, 4)};
    for (int n : {10, 50, 105}) {
      for (int k = 1; k < n; ++k) {
        for (const auto& x : ratios) {
          const double a = std::sqrt(x.convert_to<double>());
          const DickeClassConfig cfg{n, k, a};
          const auto m = exact::moments(n, k, x);
          const auto exp = analytic::mean_spin(cfg, eval);
          const double var = analytic::perp_variance_min(cfg, eval);
          const bool ok = close_rel(exp.sx, exact::sx(m, x), 1e-12) && close_rel(exp.sz, exact::sz(m), 1e-12) &&
                          close_rel(var, exact::perp_variance(m), 1e-12);
          r.record(ok, cfg_text(n, k, a));
        }
      }
    }
  });
}

SuiteResult suite_squeezing_exists(const analytic::EvalOptions& eval) {
  return timed("squeezing_exists", [&](SuiteResult& r) {
    bool found = false;
    for (int j = 1; j < 100 && !found; ++j) {
      const auto rep = analytic::squeezing_parameter({8, 4, 0.01 * j}, eval);
      found = rep.xi && *rep.xi < 1.0;
    }
    r.record(found, "N=8 k=4 has xi < 1 somewhere in (0,1)");
    const auto spot = analytic::squeezing_parameter({2, 1, 0.6}, eval);
    r.record(spot.xi && std::abs(*spot.xi - 0.7276) <= 1e-3, "N=2 k=1 a=0.6 xi = 0.7276");
  });
}

SuiteResult suite_fig2_ordering(const analytic::EvalOptions& eval) {
  return timed("fig2_ordering", [&](SuiteResult& r) {
    SweepSpec spec;
    spec.n = 105;
    spec.k_list = {15, 35, 52};
    const auto rows = run_sweep(spec, 0, eval);
    std::vector<double> minima;
    bool finite = true;
    for (int k : spec.k_list) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& row : rows) {
        if (row.config.k != k || !row.xi) continue;
        finite = finite && std::isfinite(*row.xi);
        best = std::min(best, *row.xi);
      }
      minima.push_back(best);
    }
    r.record(finite, "no NaN/inf in N=105 curves");
    r.record(minima[2] < minima[0] && minima[2] < minima[1], "k=52 has the smallest minimum");
  });
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  out.push_back(suite_table_concordance(opts.eval));
  if (opts.tables_only) return out;
  const int n = opts.max_n;
  out.push_back(suite_oracle_equivalence(n, opts.eval));
  out.push_back(suite_construction_equivalence(n));
  out.push_back(suite_exchange_symmetry(n, opts.eval));
  out.push_back(suite_monotonicity_in_k(opts.eval));
  out.push_back(suite_dicke_limit(n, opts.eval));
  out.push_back(suite_structural_zeros(n));
  out.push_back(suite_minimum_identification(n, opts.scan_steps, opts.eval));
  out.push_back(suite_operator_algebra(n));
  out.push_back(suite_coherent_calibration(n));
  out.push_back(suite_exact_cross_path(opts.eval));
  out.push_back(suite_squeezing_exists(opts.eval));
  out.push_back(suite_fig2_ordering(opts.eval));
  return out;
}

}  // namespace dsq::app
