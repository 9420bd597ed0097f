#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "dsq/errors.hpp"

namespace dsq {

using Vec3 = std::array<double, 3>;

/// |Psi_{k,N-k}>: the symmetrized product of k copies of |0> and N-k copies
/// of (a, sqrt(1 - a^2)).
struct DickeClassConfig {
  int n = 2;
  int k = 1;
  double a = 0.0;

  friend bool operator==(const DickeClassConfig&, const DickeClassConfig&) = default;
};

/// Which evaluation route a configuration must be valid for.
///   analytic      2 <= N <= 300, 1 <= k <= N-1
///   dicke_oracle  2 <= N <= 300, 0 <= k <= N
///   full_hilbert  2 <= N <= 12,  0 <= k <= N
/// All routes require 0 <= a < 1.
enum class Domain { analytic, dicke_oracle, full_hilbert };

inline constexpr int kMaxAnalyticN = 300;
inline constexpr int kMaxFullHilbertN = 12;

/// Returns cfg unchanged when it lies in the domain, otherwise throws an
/// Error whose kind names the first violated constraint (N, then k, then a).
DickeClassConfig validate(const DickeClassConfig& cfg, Domain domain = Domain::analytic);

struct SpinExpectation {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double norm = 0.0;

  static SpinExpectation from_components(double sx, double sy, double sz);
};

/// n0 along the mean spin, n1 = (0,1,0), n2 = n0 x n1 rotated into the x-z plane.
struct FrameBasis {
  Vec3 n0{};
  Vec3 n1{};
  Vec3 n2{};
};

/// Matrix elements of sigma.n2 between the two spinors, scaled so that
///   m1 = <0|s.n2|0>, m2 = <0|s.n2|u2>, m3 = <u2|s.n2|u2>.
struct FrameCoefficients {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

enum class Verdict { squeezed, not_squeezed, undefined_mean_spin };
enum class Method { analytic, oracle_eig, oracle_scan };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Method m) noexcept;

struct SqueezingReport {
  DickeClassConfig config;
  SpinExpectation mean_spin;
  /// Minimum variance of S.n over n perpendicular to the mean spin.
  /// NaN when the mean spin is null.
  double perp_variance_min = 0.0;
  /// 2 sqrt(perp_variance_min / N); empty when the mean spin is null.
  std::optional<double> xi;
  /// In-plane angle of the minimizing direction, n = n1 cos(phi) + n2 sin(phi), in [0, pi).
  double phi_opt = 0.0;
  Verdict verdict = Verdict::undefined_mean_spin;
  Method method = Method::analytic;
};

/// xi from the perpendicular variance, and the matching verdict.
double xi_from_variance(double perp_variance, int n);
Verdict verdict_for(double xi) noexcept;

/// The mean spin is treated as null below 1e-9 * N/2.
double null_mean_spin_tolerance(int n) noexcept;

}  // namespace dsq
