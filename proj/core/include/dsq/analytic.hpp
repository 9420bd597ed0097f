#pragma once

#include "dsq/state_model.hpp"

namespace dsq::analytic {

/// Knobs that exist only so the verification harness can prove it notices
/// a wrong sum. Production callers use the defaults.
struct EvalOptions {
  /// Relative offset applied to the first <Sx> sum.
  double sx_sum_perturbation = 0.0;
};

/// Closed-form mean spin. sy is exactly 0.
SpinExpectation mean_spin(const DickeClassConfig& cfg, const EvalOptions& opts = {});

/// Frame of the mean spin. Throws Error(undefined_mean_spin) when
/// exp.norm is below null_mean_spin_tolerance(n).
FrameBasis frame(const SpinExpectation& exp, int n);

/// The three matrix elements of sigma.n2 between |0> and |u2>.
/// Throws Error(undefined_mean_spin) like frame().
FrameCoefficients frame_coefficients(const SpinExpectation& exp, double a, int n);

/// <S_{n2}^2> from the general pair-correlation sum.
/// Throws Error(undefined_mean_spin) when the mean spin is null.
double perp_variance_min(const DickeClassConfig& cfg, const EvalOptions& opts = {});

/// Full report. A null mean spin is reported through the verdict, not thrown.
SqueezingReport squeezing_parameter(const DickeClassConfig& cfg, const EvalOptions& opts = {});

}  // namespace dsq::analytic
