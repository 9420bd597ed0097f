#pragma once

#include "dsq/combinatorics.hpp"

namespace dsq::exact {

/// Closed-form moments evaluated in rational arithmetic for rational a^2.
/// <Sx> itself is irrational, so it is carried as <Sx> / (a sqrt(1 - a^2)).
struct Moments {
  ExactRational norm_sq;
  ExactRational sx_over_ab;
  ExactRational sz;
  ExactRational mean_spin_norm_sq;
  /// <S_{n2}^2>; meaningful only when mean_spin_norm_sq > 0.
  ExactRational perp_variance;
};

/// Requires 2 <= n <= 1000, 1 <= k <= n-1, 0 <= a_squared < 1.
Moments moments(int n, int k, const ExactRational& a_squared);

/// Floating views of the exact results; each involves a single final rounding
/// apart from the sqrt in <Sx>.
double sx(const Moments& m, const ExactRational& a_squared);
double sz(const Moments& m);
double perp_variance(const Moments& m);

}  // namespace dsq::exact
