#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dsq/state_model.hpp"

// Brute-force reference for the closed forms. Everything here is built from
// the state vector and the angular-momentum matrices; nothing reuses the
// analytic sums.
namespace dsq::oracle {

using Complex = std::complex<double>;

/// Amplitudes in the Dicke basis |s = N/2, m = N/2 - j>, j = 0..N excitations.
struct DickeVector {
  int n = 0;
  std::vector<Complex> coefficients;
};

/// Amplitudes over the 2^N computational basis. Bit q of the index is the
/// state of qubit q (0 -> |0>, 1 -> |1>).
struct FullStateVector {
  int n = 0;
  std::vector<Complex> amplitudes;
};

/// axis . (Sx, Sy, Sz) as a dense Hermitian matrix in the Dicke basis.
struct CollectiveOperator {
  Eigen::MatrixXcd matrix;
  Vec3 axis{};
};

/// Second moments of the spin in the plane perpendicular to the mean spin:
/// t11 = <S_{n1}^2>, t22 = <S_{n2}^2>, t12 = <{S_{n1}, S_{n2}}>/2.
struct PerpVarianceMatrix {
  double t11 = 0.0;
  double t22 = 0.0;
  double t12 = 0.0;
};

struct PerpMinimum {
  double variance = 0.0;
  double phi = 0.0;  // in [0, pi)
  bool degenerate = false;
};

/// Normalized Dicke-basis coefficients. Accepts k in [0, N].
DickeVector dicke_coefficients(const DickeClassConfig& cfg);

/// Equal-weight sum over all C(N,k) placements of |0> among N qubits with
/// |u2> elsewhere, normalized. N <= 12.
FullStateVector full_hilbert_state(const DickeClassConfig& cfg);

/// Overlaps <N/2, m_j | psi> for j = 0..N.
DickeVector project_to_dicke(const FullStateVector& state);

/// True when the amplitude of every basis index equals that of each
/// adjacent-qubit transposition of it (these generate all permutations).
bool is_permutation_symmetric(const FullStateVector& state, double tol);

CollectiveOperator collective_operator(int n, const Vec3& axis);

/// <psi|O|psi> without dropping the imaginary part.
Complex matrix_element(const DickeVector& state, const CollectiveOperator& op);

/// Real part of <psi|O|psi>. Throws Error(dimension_mismatch).
double expectation(const DickeVector& state, const CollectiveOperator& op);

/// Mean spin measured on the state.
SpinExpectation mean_spin(const DickeVector& state);

/// Mean spin computed in the full 2^N space via per-qubit Pauli actions.
SpinExpectation mean_spin(const FullStateVector& state);

PerpVarianceMatrix t_matrix(const DickeVector& state, const FrameBasis& frame);
PerpVarianceMatrix t_matrix(const FullStateVector& state, const FrameBasis& frame);

/// Smaller eigenvalue of T and the angle of its eigenvector.
PerpMinimum min_perp_variance_eig(const PerpVarianceMatrix& t);

inline constexpr int kDefaultScanSteps = 3600;

/// Minimum of <(S.n(phi))^2> over phi_i = i * pi / steps. steps >= 360.
double min_perp_variance_scan(const DickeVector& state, const FrameBasis& frame,
                              int steps = kDefaultScanSteps);

/// Same scan, also reporting the grid angle that attains the minimum.
PerpMinimum scan_perp_minimum(const DickeVector& state, const FrameBasis& frame,
                              int steps = kDefaultScanSteps);

enum class Basis { dicke, full_hilbert };

/// xi from the eigenvalue route, method = oracle_eig.
SqueezingReport squeezing_parameter_oracle(const DickeClassConfig& cfg,
                                           Basis basis = Basis::dicke);

/// xi from the angle scan, method = oracle_scan.
SqueezingReport squeezing_parameter_scan(const DickeClassConfig& cfg,
                                         int steps = kDefaultScanSteps);

}  // namespace dsq::oracle
