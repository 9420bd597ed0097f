#pragma once

#include <vector>

#include "dsq/state_model.hpp"

// Per-configuration closed forms for N = 2..5, written out row by row. They
// are verification data only; the analytic engine never reads them.
namespace dsq::app::golden {

struct MeanSpinRow {
  int n;
  int k;
  double (*value)(double a);
  /// True when this form replaces a widely quoted variant that
  /// disagrees with the Dicke-basis oracle.
  bool corrected;
};

struct VarianceRow {
  int n;
  int k;
  double (*value)(double a, const FrameCoefficients& m);
  bool corrected;
};

/// <Sx>, 10 rows.
const std::vector<MeanSpinRow>& sx_rows();
/// <Sz>, 10 rows; N=5,k=2 corrected.
const std::vector<MeanSpinRow>& sz_rows();
/// <S_{n2}^2>, 9 rows (there is no N=4,k=3 row); N=4,k=2 corrected.
const std::vector<VarianceRow>& variance_rows();

/// The uncorrected variants, kept so tests can show they disagree
/// with the oracle.
double uncorrected_sz_5_2(double a);
double uncorrected_variance_4_2(double a, const FrameCoefficients& m);

/// Uncorrected coefficient m3, without the sqrt(1 - a^2) on the <Sz> term.
double uncorrected_m3(const SpinExpectation& exp, double a);

}  // namespace dsq::app::golden
