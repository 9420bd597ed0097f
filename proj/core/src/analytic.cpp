#include "dsq/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dsq/combinatorics.hpp"
#include "dsq/detail/closed_form_sums.hpp"

namespace dsq::analytic {

namespace {

struct FloatPolicy {
  using value_type = double;
  using accumulator = CompensatedSum;
  static double binom(int n, int k) { return binomial_term(n, k); }
  static double from_int(long v) { return static_cast<double>(v); }
};

detail::ClosedFormSums<double> sums_for(const DickeClassConfig& cfg, const EvalOptions& opts) {
  validate(cfg, Domain::analytic);
  return detail::evaluate_closed_form_sums<FloatPolicy>(cfg.n, cfg.k, cfg.a * cfg.a,
                                                        1.0 + opts.sx_sum_perturbation);
}

SpinExpectation mean_spin_from(const detail::ClosedFormSums<double>& s, double a) {
  const double ab = a * std::sqrt(1.0 - a * a);
  return SpinExpectation::from_components(ab * s.sx_over_ab, 0.0, s.sz);
}

void require_mean_spin(const SpinExpectation& exp, int n) {
  if (!(exp.norm >= null_mean_spin_tolerance(n))) {
    throw Error(ErrorKind::undefined_mean_spin, "mean spin is a null vector");
  }
}

double perp_variance_from(const detail::ClosedFormSums<double>& s, const SpinExpectation& exp,
                          const DickeClassConfig& cfg) {
  const auto [m1, m2, m3] = frame_coefficients(exp, cfg.a, cfg.n);
  const double a = cfg.a;
  std::array<double, detail::kPairTermCount> p{};
  p[detail::kM1M1] = m1 * m1;
  p[detail::kM1M2a] = m1 * m2 * a;
  p[detail::kM2M2aa] = m2 * m2 * a * a;
  p[detail::kM1M3] = m1 * m3;
  p[detail::kM2M2] = m2 * m2;
  p[detail::kM2M3a] = m2 * m3 * a;
  p[detail::kM3M3] = m3 * m3;

  CompensatedSum acc(0.25 * cfg.n);
  for (std::size_t i = 0; i < p.size(); ++i) acc.add(s.pair[i] * p[i]);
  return acc.value();
}

}  // namespace

SpinExpectation mean_spin(const DickeClassConfig& cfg, const EvalOptions& opts) {
  return mean_spin_from(sums_for(cfg, opts), cfg.a);
}

FrameBasis frame(const SpinExpectation& exp, int n) {
  require_mean_spin(exp, n);
  const double inv = 1.0 / exp.norm;
  return {
      {exp.sx * inv, 0.0, exp.sz * inv},
      {0.0, 1.0, 0.0},
      {-exp.sz * inv, 0.0, exp.sx * inv},
  };
}

FrameCoefficients frame_coefficients(const SpinExpectation& exp, double a, int n) {
  require_mean_spin(exp, n);
  const double b = std::sqrt(1.0 - a * a);
  const double inv = 1.0 / exp.norm;
  // sigma.n2 between |0> and |u2> = (a, b), with n2 = (-sz, 0, sx)/|S|.
  return {
      exp.sx * inv,
      (a * exp.sx - b * exp.sz) * inv,
      ((2.0 * a * a - 1.0) * exp.sx - 2.0 * a * b * exp.sz) * inv,
  };
}

double perp_variance_min(const DickeClassConfig& cfg, const EvalOptions& opts) {
  const auto s = sums_for(cfg, opts);
  return perp_variance_from(s, mean_spin_from(s, cfg.a), cfg);
}

SqueezingReport squeezing_parameter(const DickeClassConfig& cfg, const EvalOptions& opts) {
  const auto s = sums_for(cfg, opts);
  SqueezingReport report;
  report.config = cfg;
  report.method = Method::analytic;
  report.mean_spin = mean_spin_from(s, cfg.a);
  if (!(report.mean_spin.norm >= null_mean_spin_tolerance(cfg.n))) {
    report.perp_variance_min = std::numeric_limits<double>::quiet_NaN();
    report.verdict = Verdict::undefined_mean_spin;
    return report;
  }
  report.perp_variance_min = perp_variance_from(s, report.mean_spin, cfg);
  report.xi = xi_from_variance(report.perp_variance_min, cfg.n);
  report.phi_opt = std::numbers::pi / 2;  // n_perp = n2
  report.verdict = verdict_for(*report.xi);
  return report;
}

}  // namespace dsq::analytic
