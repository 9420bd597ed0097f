#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dsq/combinatorics.hpp"
#include "dsq/errors.hpp"

using dsq::ExactInteger;
using dsq::ExactRational;

namespace {

std::vector<std::vector<ExactInteger>> pascal(int rows) {
  std::vector<std::vector<ExactInteger>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST(Binomial, SmallValues) {
  EXPECT_EQ(dsq::binomial(5, 2), 10);
  EXPECT_EQ(dsq::binomial(0, 0), 1);
  EXPECT_EQ(dsq::binomial(7, 7), 1);
}

TEST(Binomial, OutOfRangeLowerIndexIsZero) {
  EXPECT_EQ(dsq::binomial(3, 5), 0);
  EXPECT_EQ(dsq::binomial(3, -1), 0);
  EXPECT_EQ(dsq::binomial_term(3, 5), 0.0);
  EXPECT_EQ(dsq::binomial_term(-1, 0), 0.0);
}

TEST(Binomial, RejectsUpperIndexOutsideSupportedRange) {
  try {
    (void)dsq::binomial(-1, 0);
    FAIL() << "expected throw";
  } catch (const dsq::Error& e) {
    EXPECT_EQ(e.kind(), dsq::ErrorKind::binomial_out_of_range);
  }
  EXPECT_THROW((void)dsq::binomial(1001, 3), dsq::Error);
  EXPECT_THROW((void)dsq::binomial_term(1001, 3), dsq::Error);
  EXPECT_NO_THROW((void)dsq::binomial(1000, 500));
}

TEST(Binomial, CentralValueAt105MatchesPascalRecurrence) {
  const auto rows = pascal(105);
  const ExactInteger c = dsq::binomial(105, 52);
  EXPECT_EQ(c, rows[105][52]);
  EXPECT_EQ(c.str().size(), 31u);
  EXPECT_EQ(dsq::binomial_term(105, 52), static_cast<double>(rows[105][52]));
}

TEST(Binomial, AgreesWithPascalTableUpTo120) {
  const auto rows = pascal(120);
  for (int n = 0; n <= 120; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(dsq::binomial(n, k), rows[n][k]) << n << "," << k;
      ASSERT_EQ(dsq::binomial_term(n, k), static_cast<double>(rows[n][k])) << n << "," << k;
    }
  }
}

TEST(Binomial, Symmetry) {
  for (int n : {10, 60, 300, 1000}) {
    for (int k = 0; k <= n; k += std::max(1, n / 37)) {
      EXPECT_EQ(dsq::binomial(n, k), dsq::binomial(n, n - k));
    }
  }
}

TEST(Binomial, DoubleTermIsCorrectlyRoundedAt1000) {
  for (int k : {0, 17, 250, 500, 999}) {
    const ExactInteger c = dsq::binomial(1000, k);
    EXPECT_EQ(dsq::binomial_term(1000, k), static_cast<double>(c));
    EXPECT_TRUE(std::isfinite(dsq::binomial_term(1000, k)));
  }
}

TEST(CompensatedSum, MatchesExactRationalSum) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> mag(-30.0, 30.0);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    dsq::CompensatedSum s;
    ExactRational exact = 0;
    for (int i = 0; i < 400; ++i) {
      const double v = (sign(rng) ? 1.0 : -1.0) * std::exp(mag(rng));
      s += v;
      exact += ExactRational(v);
    }
    const double ref = static_cast<double>(exact);
    EXPECT_LE(std::abs(s.value() - ref), 4e-16 * std::abs(ref)) << trial;
  }
}

TEST(CompensatedSum, RecoversCancelledSmallTerm) {
  dsq::CompensatedSum s;
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  EXPECT_EQ(s.value(), 1.0);
}

TEST(Normalization, WorkedValues) {
  EXPECT_DOUBLE_EQ(dsq::normalization_sq({2, 1, 0.0}), 2.0);
  EXPECT_DOUBLE_EQ(dsq::normalization_sq({2, 1, 0.5}), 2.5);
  for (double a : {0.0, 0.2, 0.7, 0.95}) {
    EXPECT_NEAR(dsq::normalization_sq({3, 2, a}), 3.0 * (1.0 + 2.0 * a * a), 1e-13);
  }
}

TEST(Normalization, ValidatesConfig) {
  EXPECT_THROW((void)dsq::normalization_sq({1, 1, 0.5}), dsq::Error);
  EXPECT_THROW((void)dsq::normalization_sq({4, 0, 0.5}), dsq::Error);
  EXPECT_THROW((void)dsq::normalization_sq({4, 2, 1.0}), dsq::Error);
}

TEST(Normalization, IncreasesWithA) {
  for (int n : {5, 12, 105}) {
    for (int k : {1, n / 2, n - 1}) {
      double prev = 0.0;
      for (int i = 0; i <= 20; ++i) {
        const double v = dsq::normalization_sq({n, k, 0.045 * i});
        EXPECT_GT(v, 0.0);
        EXPECT_TRUE(std::isfinite(v));
        EXPECT_GE(v, prev);
        prev = v;
      }
    }
  }
}

TEST(Normalization, DoubleAgreesWithExactRational) {
  for (int n : {6, 40, 105, 300}) {
    for (int k : {1, n / 3, n / 2, n - 1}) {
      for (int num : {1, 2, 3}) {
        const ExactRational x(num, 4);
        const double ref = static_cast<double>(dsq::normalization_sq_exact(n, k, x));
        const double v = dsq::normalization_sq({n, k, std::sqrt(num / 4.0)});
        EXPECT_NEAR(v / ref, 1.0, 1e-13) << n << "," << k << "," << num;
      }
    }
  }
}
