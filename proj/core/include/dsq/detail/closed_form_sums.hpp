#pragma once

// The general closed forms for the Dicke class, written once over a scalar
// policy so the floating and exact-rational routes evaluate the same sums.
//
// With m = N - k copies of u2 and x = a^2:
//
//   norm^2        = C(N,k) sum_r C(k,r) C(m,r) x^r
//   <Sx>/(a b)    = N/norm^2 { 1/2 C(N-1,m) sum_r C(k-1,r) C(m,r+1) x^r
//                             + C(N-1,m-1) sum_r x^r C(m-1,r) [C(k,r+1)/2 + C(k,r)] }
//   <Sz>          = N/(2 norm^2) { C(N-1,m) sum_r x^r C(k-1,r) [C(m,r) + x C(m,r+1)]
//                             + C(N-1,m-1) sum_r x^r C(m-1,r) [x C(k,r+1) + (2x-1) C(k,r)] }
//
// and <S_{n2}^2> = N/4 + N(N-1)/norm^2 * sum_i pair[i] * P_i where P_i runs
// over the seven products of the spinor matrix elements listed in PairTerm.

#include <array>
#include <cstddef>
#include <vector>

namespace dsq::detail {

enum PairTerm : std::size_t {
  kM1M1 = 0,   // m1^2
  kM1M2a,      // m1 m2 a
  kM2M2aa,     // m2^2 a^2
  kM1M3,       // m1 m3
  kM2M2,       // m2^2
  kM2M3a,      // m2 m3 a
  kM3M3,       // m3^2
  kPairTermCount
};

template <typename T>
struct ClosedFormSums {
  T norm_sq{};
  T sx_over_ab{};
  T sz{};
  /// Already scaled by N(N-1)/norm^2.
  std::array<T, kPairTermCount> pair{};
};

/// Policy requirements:
///   using value_type;
///   using accumulator;                 // add(value_type), value()
///   static value_type binom(int n, int k);   // zero outside 0 <= k <= n
///   static value_type from_int(long v);
template <typename Policy>
ClosedFormSums<typename Policy::value_type> evaluate_closed_form_sums(
    int n, int k, const typename Policy::value_type& x,
    const typename Policy::value_type& sx_first_sum_scale) {
  using V = typename Policy::value_type;
  using Acc = typename Policy::accumulator;
  const auto C = [](int top, int bottom) { return Policy::binom(top, bottom); };
  const int m = n - k;
  const V one = Policy::from_int(1);
  const V two = Policy::from_int(2);
  const V half = one / two;
  const V quarter = half / two;

  // x^r for r = 0..m, built by repeated multiplication.
  std::vector<V> xp(static_cast<std::size_t>(m) + 1);
  xp[0] = one;
  for (int r = 1; r <= m; ++r) xp[r] = xp[r - 1] * x;

  ClosedFormSums<V> out;

  {
    Acc acc;
    for (int r = 0; r <= m; ++r) acc.add(C(k, r) * C(m, r) * xp[r]);
    out.norm_sq = C(n, k) * acc.value();
  }

  {
    Acc first;
    for (int r = 0; r <= m; ++r) first.add(C(k - 1, r) * C(m, r + 1) * xp[r]);
    Acc acc;
    acc.add(half * C(n - 1, m) * first.value() * sx_first_sum_scale);
    const V pre = C(n - 1, m - 1);
    for (int r = 0; r < m; ++r) {
      const V w = pre * xp[r] * C(m - 1, r);
      acc.add(w * half * C(k, r + 1));
      acc.add(w * C(k, r));
    }
    out.sx_over_ab = Policy::from_int(n) * acc.value() / out.norm_sq;
  }

  {
    Acc acc;
    const V pre1 = C(n - 1, m);
    for (int r = 0; r <= m; ++r) {
      const V w = pre1 * xp[r] * C(k - 1, r);
      acc.add(w * C(m, r));
      acc.add(w * x * C(m, r + 1));
    }
    const V pre2 = C(n - 1, m - 1);
    for (int r = 0; r < m; ++r) {
      const V w = pre2 * xp[r] * C(m - 1, r);
      acc.add(w * x * C(k, r + 1));
      acc.add(w * two * x * C(k, r));
      acc.add(-(w * C(k, r)));
    }
    out.sz = Policy::from_int(n) * acc.value() / (two * out.norm_sq);
  }

  {
    std::array<Acc, kPairTermCount> acc{};
    const V b0 = C(n - 2, m);      // both u1 slots of the pair taken by |0>
    const V b1 = C(n - 2, m - 1);  // one |0>, one |u2>
    const V b2 = C(n - 2, m - 2);  // both |u2>
    for (int r = 0; r <= m; ++r) {
      const V w = b0 * C(k - 2, r) * xp[r];
      acc[kM1M1].add(quarter * w * C(m, r));
      acc[kM1M2a].add(half * w * C(m, r + 1));
      acc[kM2M2aa].add(quarter * w * C(m, r + 2));
    }
    for (int r = 0; r < m; ++r) {
      const V w = b1 * xp[r];
      acc[kM1M2a].add(half * w * C(m - 1, r) * C(k - 1, r + 1));
      acc[kM1M3].add(half * w * C(m - 1, r) * C(k - 1, r));
      acc[kM2M2].add(half * w * C(k - 1, r) * C(m - 1, r));
      acc[kM2M3a].add(half * w * C(k - 1, r) * C(m - 1, r + 1));
    }
    for (int r = 0; r + 1 < m; ++r) {
      const V w = b2 * C(m - 2, r) * xp[r];
      acc[kM2M2aa].add(quarter * w * C(k, r + 2));
      acc[kM2M3a].add(half * w * C(k, r + 1));
      acc[kM3M3].add(quarter * w * C(k, r));
    }
    const V scale = Policy::from_int(static_cast<long>(n) * (n - 1)) / out.norm_sq;
    for (std::size_t i = 0; i < kPairTermCount; ++i) out.pair[i] = scale * acc[i].value();
  }

  return out;
}

}  // namespace dsq::detail
