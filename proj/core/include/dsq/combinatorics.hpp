#pragma once

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsq/state_model.hpp"

namespace dsq {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBinomialN = 1000;

/// Exact C(n, k) for 0 <= n <= 1000. Zero when k < 0 or k > n.
/// Throws Error(binomial_out_of_range) for n outside [0, 1000].
ExactInteger binomial(int n, int k);

/// C(n, k) rounded once to double, for use inside the closed-form sums.
/// Zero for any (n, k) outside 0 <= k <= n, including a negative upper
/// index, which the sums reach at k = 1 (C(k - 2, r)).
/// Backed by an immutable table built from exact Pascal rows on first use.
double binomial_term(int n, int k);

/// Neumaier's variant of Kahan summation. The running compensation stays
/// correct when a term is larger in magnitude than the partial sum.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Squared normalization of the subset-sum state:
///   C(N,k) * sum_r C(k,r) C(N-k,r) a^(2r).
/// Exactly C(N,k) at a = 0. Validates cfg against the analytic domain.
double normalization_sq(const DickeClassConfig& cfg);

/// Same quantity in exact rational arithmetic with a^2 given as a ratio.
ExactRational normalization_sq_exact(int n, int k, const ExactRational& a_squared);

}  // namespace dsq
