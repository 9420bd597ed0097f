#include "dsq/exact.hpp"

#include <cmath>

#include "dsq/detail/closed_form_sums.hpp"

namespace dsq::exact {

namespace {

struct RationalSum {
  ExactRational total = 0;
  void add(const ExactRational& v) { total += v; }
  ExactRational value() const { return total; }
};

struct ExactPolicy {
  using value_type = ExactRational;
  using accumulator = RationalSum;
  static ExactRational binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return ExactRational(binomial(n, k));
  }
  static ExactRational from_int(long v) { return ExactRational(v); }
};

}  // namespace

Moments moments(int n, int k, const ExactRational& a_squared) {
  if (n < 2 || n > kMaxBinomialN) {
    throw Error(ErrorKind::n_out_of_range, "N outside [2, 1000]");
  }
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::k_out_of_range, "k must lie in [1, N-1]");
  }
  if (a_squared < 0 || a_squared >= 1) {
    throw Error(ErrorKind::a_out_of_range, "a^2 must lie in [0, 1)");
  }
  const ExactRational& x = a_squared;
  const auto s = detail::evaluate_closed_form_sums<ExactPolicy>(n, k, x, ExactRational(1));

  Moments out;
  out.norm_sq = s.norm_sq;
  out.sx_over_ab = s.sx_over_ab;
  out.sz = s.sz;

  // <Sx> = a b X with X = sx_over_ab, so every product of the spinor
  // matrix elements reduces to a rational:
  //   m1 = a b X / |S|, m2 = b U / |S|, m3 = a b W / |S|.
  const ExactRational one = 1;
  const ExactRational ab_sq = x * (one - x);
  const ExactRational& X = s.sx_over_ab;
  out.mean_spin_norm_sq = ab_sq * X * X + s.sz * s.sz;
  if (out.mean_spin_norm_sq == 0) return out;

  const ExactRational U = x * X - s.sz;
  const ExactRational W = (2 * x - 1) * X - 2 * s.sz;
  const ExactRational inv = one / out.mean_spin_norm_sq;
  std::array<ExactRational, detail::kPairTermCount> p;
  p[detail::kM1M1] = ab_sq * X * X * inv;
  p[detail::kM1M2a] = ab_sq * X * U * inv;
  p[detail::kM2M2aa] = ab_sq * U * U * inv;
  p[detail::kM1M3] = ab_sq * X * W * inv;
  p[detail::kM2M2] = (one - x) * U * U * inv;
  p[detail::kM2M3a] = ab_sq * U * W * inv;
  p[detail::kM3M3] = ab_sq * W * W * inv;

  ExactRational v = ExactRational(n, 4);
  for (std::size_t i = 0; i < p.size(); ++i) v += s.pair[i] * p[i];
  out.perp_variance = v;
  return out;
}

double sx(const Moments& m, const ExactRational& a_squared) {
  const ExactRational sx_sq = a_squared * (1 - a_squared) * m.sx_over_ab * m.sx_over_ab;
  const double magnitude = std::sqrt(sx_sq.convert_to<double>());
  return m.sx_over_ab < 0 ? -magnitude : magnitude;
}

double sz(const Moments& m) { return m.sz.convert_to<double>(); }

double perp_variance(const Moments& m) { return m.perp_variance.convert_to<double>(); }

}  // namespace dsq::exact
