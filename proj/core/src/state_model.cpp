#include "dsq/state_model.hpp"

#include <cmath>
#include <string>

namespace dsq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::n_out_of_range: return "n_out_of_range";
    case ErrorKind::k_out_of_range: return "k_out_of_range";
    case ErrorKind::a_out_of_range: return "a_out_of_range";
    case ErrorKind::binomial_out_of_range: return "binomial_out_of_range";
    case ErrorKind::undefined_mean_spin: return "undefined_mean_spin";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::squeezed: return "squeezed";
    case Verdict::not_squeezed: return "not_squeezed";
    case Verdict::undefined_mean_spin: return "undefined_mean_spin";
  }
  return "unknown";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::oracle_eig: return "oracle_eig";
    case Method::oracle_scan: return "oracle_scan";
  }
  return "unknown";
}

DickeClassConfig validate(const DickeClassConfig& cfg, Domain domain) {
  const int max_n = domain == Domain::full_hilbert ? kMaxFullHilbertN : kMaxAnalyticN;
  if (cfg.n < 2 || cfg.n > max_n) {
    throw Error(ErrorKind::n_out_of_range,
                "N = " + std::to_string(cfg.n) + " outside [2, " + std::to_string(max_n) + "]");
  }
  const int min_k = domain == Domain::analytic ? 1 : 0;
  const int max_k = domain == Domain::analytic ? cfg.n - 1 : cfg.n;
  if (cfg.k < min_k || cfg.k > max_k) {
    throw Error(ErrorKind::k_out_of_range,
                "k = " + std::to_string(cfg.k) + " outside [" + std::to_string(min_k) + ", " +
                    std::to_string(max_k) + "]");
  }
  if (!(cfg.a >= 0.0 && cfg.a < 1.0)) {
    throw Error(ErrorKind::a_out_of_range, "a = " + std::to_string(cfg.a) + " outside [0, 1)");
  }
  return cfg;
}

SpinExpectation SpinExpectation::from_components(double sx, double sy, double sz) {
  return {sx, sy, sz, std::sqrt(sx * sx + sy * sy + sz * sz)};
}

double xi_from_variance(double perp_variance, int n) {
  return 2.0 * std::sqrt(perp_variance / static_cast<double>(n));
}

Verdict verdict_for(double xi) noexcept {
  return xi < 1.0 ? Verdict::squeezed : Verdict::not_squeezed;
}

double null_mean_spin_tolerance(int n) noexcept { return 1e-9 * (0.5 * n); }

}  // namespace dsq
