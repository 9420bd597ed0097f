#include "dsq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dsq/analytic.hpp"
#include "dsq/combinatorics.hpp"

namespace dsq::oracle {

namespace {

using Amplitudes = std::vector<Complex>;

double integer_power(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

void normalize(Amplitudes& v) {
  double scale = 0.0;
  for (const auto& c : v) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw Error(ErrorKind::invalid_argument, "zero state vector");
  double sum = 0.0;
  for (const auto& c : v) sum += std::norm(c / scale);
  const double inv = 1.0 / (scale * std::sqrt(sum));
  for (auto& c : v) c *= inv;
}

Eigen::VectorXcd as_eigen(const DickeVector& state) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(state.coefficients.size()));
  for (std::size_t j = 0; j < state.coefficients.size(); ++j) v(static_cast<Eigen::Index>(j)) = state.coefficients[j];
  return v;
}

void require_dimension(const DickeVector& state, const CollectiveOperator& op) {
  const auto dim = static_cast<Eigen::Index>(state.coefficients.size());
  if (op.matrix.rows() != dim || op.matrix.cols() != dim) {
    throw Error(ErrorKind::dimension_mismatch,
                "state dimension " + std::to_string(dim) + " does not match operator dimension " +
                    std::to_string(op.matrix.rows()));
  }
}

// (S.axis) psi in the 2^N space, one Pauli term per qubit.
Amplitudes apply_collective(const FullStateVector& state, const Vec3& axis) {
  const Complex i_unit(0.0, 1.0);
  const auto& psi = state.amplitudes;
  Amplitudes out(psi.size(), Complex(0.0, 0.0));
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    Complex acc(0.0, 0.0);
    for (int q = 0; q < state.n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      const bool one = (idx & bit) != 0;
      const Complex flipped = psi[idx ^ bit];
      acc += axis[0] * flipped;
      acc += axis[1] * (one ? i_unit : -i_unit) * flipped;
      acc += axis[2] * (one ? -1.0 : 1.0) * psi[idx];
    }
    out[idx] = 0.5 * acc;
  }
  return out;
}

Complex inner(const Amplitudes& lhs, const Amplitudes& rhs) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < lhs.size(); ++i) acc += std::conj(lhs[i]) * rhs[i];
  return acc;
}

SqueezingReport undefined_report(const DickeClassConfig& cfg, const SpinExpectation& mean, Method method) {
  SqueezingReport report;
  report.config = cfg;
  report.mean_spin = mean;
  report.method = method;
  report.perp_variance_min = std::numeric_limits<double>::quiet_NaN();
  report.verdict = Verdict::undefined_mean_spin;
  return report;
}

bool is_null(const SpinExpectation& mean, int n) { return !(mean.norm >= null_mean_spin_tolerance(n)); }

}  // namespace

DickeVector dicke_coefficients(const DickeClassConfig& cfg) {
  validate(cfg, Domain::dicke_oracle);
  const int n = cfg.n;
  const int m = n - cfg.k;
  const double a = cfg.a;
  const double b = std::sqrt(1.0 - a * a);
  // A basis string with j ones gets a contribution from every placement of
  // the k |0> factors that avoids those ones: C(N - j, k) placements, each
  // weighing a^(m - j) b^j. The Dicke vector |N/2, N/2 - j> spreads over
  // C(N, j) strings.
  DickeVector out{n, Amplitudes(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0))};
  for (int j = 0; j <= m; ++j) {
    const double c = binomial_term(n - j, m - j) * integer_power(a, m - j) * integer_power(b, j) *
                     std::sqrt(binomial_term(n, j));
    out.coefficients[static_cast<std::size_t>(j)] = c;
  }
  normalize(out.coefficients);
  return out;
}

FullStateVector full_hilbert_state(const DickeClassConfig& cfg) {
  validate(cfg, Domain::full_hilbert);
  const int n = cfg.n;
  const std::size_t dim = std::size_t{1} << n;
  const std::array<double, 2> zero{1.0, 0.0};
  const std::array<double, 2> u2{cfg.a, std::sqrt(1.0 - cfg.a * cfg.a)};

  Amplitudes total(dim, Complex(0.0, 0.0));
  std::vector<double> product;
  product.reserve(dim);
  // Each mask with k bits set marks where the |0> spinors sit.
  for (std::size_t mask = 0; mask < dim; ++mask) {
    if (std::popcount(mask) != cfg.k) continue;
    product.assign(1, 1.0);
    for (int q = 0; q < n; ++q) {
      const auto& spinor = (mask >> q) & 1U ? zero : u2;
      const std::size_t len = product.size();
      product.resize(2 * len);
      for (std::size_t i = 0; i < len; ++i) {
        product[i + len] = product[i] * spinor[1];
        product[i] *= spinor[0];
      }
    }
    for (std::size_t i = 0; i < dim; ++i) total[i] += product[i];
  }
  normalize(total);
  return {n, std::move(total)};
}

DickeVector project_to_dicke(const FullStateVector& state) {
  const int n = state.n;
  DickeVector out{n, Amplitudes(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0))};
  for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    out.coefficients[static_cast<std::size_t>(std::popcount(idx))] += state.amplitudes[idx];
  }
  for (int j = 0; j <= n; ++j) {
    out.coefficients[static_cast<std::size_t>(j)] /= std::sqrt(binomial_term(n, j));
  }
  return out;
}

bool is_permutation_symmetric(const FullStateVector& state, double tol) {
  for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    for (int q = 0; q + 1 < state.n; ++q) {
      const std::size_t lo = (idx >> q) & 1U;
      const std::size_t hi = (idx >> (q + 1)) & 1U;
      if (lo == hi) continue;
      const std::size_t swapped = idx ^ ((std::size_t{1} << q) | (std::size_t{1} << (q + 1)));
      if (std::abs(state.amplitudes[idx] - state.amplitudes[swapped]) > tol) return false;
    }
  }
  return true;
}

CollectiveOperator collective_operator(int n, const Vec3& axis) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "collective operator needs N >= 1");
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(len - 1.0) > 1e-9) {
    throw Error(ErrorKind::invalid_argument, "collective operator axis must be a unit vector");
  }
  const Eigen::Index dim = n + 1;
  const double s = 0.5 * n;
  const Complex i_unit(0.0, 1.0);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mj = s - static_cast<double>(j);
    mat(j, j) = axis[2] * mj;
    if (j > 0) {
      // S+ |s, m_j> = sqrt(s(s+1) - m_j(m_j+1)) |s, m_j + 1>, and m_j + 1 is row j-1.
      const double raise = std::sqrt(s * (s + 1.0) - mj * (mj + 1.0));
      // Sx = (S+ + S-)/2, Sy = (S+ - S-)/(2i)
      mat(j - 1, j) += 0.5 * raise * (axis[0] - i_unit * axis[1]);
      mat(j, j - 1) += 0.5 * raise * (axis[0] + i_unit * axis[1]);
    }
  }
  return {std::move(mat), axis};
}

Complex matrix_element(const DickeVector& state, const CollectiveOperator& op) {
  require_dimension(state, op);
  const Eigen::VectorXcd v = as_eigen(state);
  return v.dot(op.matrix * v);
}

double expectation(const DickeVector& state, const CollectiveOperator& op) {
  return matrix_element(state, op).real();
}

SpinExpectation mean_spin(const DickeVector& state) {
  const double sx = expectation(state, collective_operator(state.n, {1.0, 0.0, 0.0}));
  const double sy = expectation(state, collective_operator(state.n, {0.0, 1.0, 0.0}));
  const double sz = expectation(state, collective_operator(state.n, {0.0, 0.0, 1.0}));
  return SpinExpectation::from_components(sx, sy, sz);
}

SpinExpectation mean_spin(const FullStateVector& state) {
  const auto component = [&](const Vec3& axis) {
    return inner(state.amplitudes, apply_collective(state, axis)).real();
  };
  return SpinExpectation::from_components(component({1.0, 0.0, 0.0}), component({0.0, 1.0, 0.0}),
                                          component({0.0, 0.0, 1.0}));
}

PerpVarianceMatrix t_matrix(const DickeVector& state, const FrameBasis& frame) {
  const Eigen::VectorXcd psi = as_eigen(state);
  const auto s1 = collective_operator(state.n, frame.n1);
  const auto s2 = collective_operator(state.n, frame.n2);
  require_dimension(state, s1);
  const Eigen::VectorXcd v1 = s1.matrix * psi;
  const Eigen::VectorXcd v2 = s2.matrix * psi;
  // For Hermitian A, B: <A^2> = |A psi|^2 and <{A,B}>/2 = Re <A psi, B psi>.
  return {v1.squaredNorm(), v2.squaredNorm(), v1.dot(v2).real()};
}

PerpVarianceMatrix t_matrix(const FullStateVector& state, const FrameBasis& frame) {
  const auto v1 = apply_collective(state, frame.n1);
  const auto v2 = apply_collective(state, frame.n2);
  return {inner(v1, v1).real(), inner(v2, v2).real(), inner(v1, v2).real()};
}

PerpMinimum min_perp_variance_eig(const PerpVarianceMatrix& t) {
  const double mean = 0.5 * (t.t11 + t.t22);
  const double radius = std::hypot(0.5 * (t.t11 - t.t22), t.t12);
  PerpMinimum out;
  out.variance = mean - radius;
  out.degenerate = radius <= 1e-12 * std::max(1.0, std::abs(mean));
  // The larger eigenvector sits at half the angle of (t11 - t22, 2 t12); the
  // smaller one is a quarter turn away.
  const double phi_max = 0.5 * std::atan2(2.0 * t.t12, t.t11 - t.t22);
  double phi = phi_max + 0.5 * std::numbers::pi;
  phi = std::fmod(phi, std::numbers::pi);
  if (phi < 0.0) phi += std::numbers::pi;
  out.phi = phi;
  return out;
}

double min_perp_variance_scan(const DickeVector& state, const FrameBasis& frame, int steps) {
  return scan_perp_minimum(state, frame, steps).variance;
}

PerpMinimum scan_perp_minimum(const DickeVector& state, const FrameBasis& frame, int steps) {
  if (steps < 360) throw Error(ErrorKind::invalid_argument, "scan needs at least 360 steps");
  const Eigen::VectorXcd psi = as_eigen(state);
  const auto s1 = collective_operator(state.n, frame.n1);
  require_dimension(state, s1);
  const Eigen::VectorXcd v1 = s1.matrix * psi;
  const Eigen::VectorXcd v2 = collective_operator(state.n, frame.n2).matrix * psi;
  PerpMinimum best{std::numeric_limits<double>::infinity(), 0.0, false};
  for (int i = 0; i < steps; ++i) {
    const double phi = std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps);
    // S.n(phi) psi is linear in the direction.
    const double v = (std::cos(phi) * v1 + std::sin(phi) * v2).squaredNorm();
    if (v < best.variance) best = {v, phi, false};
  }
  return best;
}

SqueezingReport squeezing_parameter_oracle(const DickeClassConfig& cfg, Basis basis) {
  validate(cfg, basis == Basis::dicke ? Domain::dicke_oracle : Domain::full_hilbert);
  SpinExpectation mean;
  PerpVarianceMatrix t;
  if (basis == Basis::dicke) {
    const auto state = dicke_coefficients(cfg);
    mean = mean_spin(state);
    if (is_null(mean, cfg.n)) return undefined_report(cfg, mean, Method::oracle_eig);
    t = t_matrix(state, analytic::frame(mean, cfg.n));
  } else {
    const auto state = full_hilbert_state(cfg);
    mean = mean_spin(state);
    if (is_null(mean, cfg.n)) return undefined_report(cfg, mean, Method::oracle_eig);
    t = t_matrix(state, analytic::frame(mean, cfg.n));
  }
  const auto best = min_perp_variance_eig(t);
  SqueezingReport report;
  report.config = cfg;
  report.mean_spin = mean;
  report.method = Method::oracle_eig;
  report.perp_variance_min = best.variance;
  report.phi_opt = best.phi;
  report.xi = xi_from_variance(std::max(best.variance, 0.0), cfg.n);
  report.verdict = verdict_for(*report.xi);
  return report;
}

SqueezingReport squeezing_parameter_scan(const DickeClassConfig& cfg, int steps) {
  validate(cfg, Domain::dicke_oracle);
  const auto state = dicke_coefficients(cfg);
  const auto mean = mean_spin(state);
  if (is_null(mean, cfg.n)) return undefined_report(cfg, mean, Method::oracle_scan);
  const auto frame = analytic::frame(mean, cfg.n);
  SqueezingReport report;
  report.config = cfg;
  report.mean_spin = mean;
  report.method = Method::oracle_scan;
  const auto best = scan_perp_minimum(state, frame, steps);
  report.perp_variance_min = best.variance;
  report.phi_opt = best.phi;
  report.xi = xi_from_variance(best.variance, cfg.n);
  report.verdict = verdict_for(*report.xi);
  return report;
}

}  // namespace dsq::oracle
