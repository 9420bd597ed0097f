#include <gtest/gtest.h>

#include <cmath>

#include "dsq/analytic.hpp"
#include "dsq/errors.hpp"
#include "support/brute_force.hpp"

namespace an = dsq::analytic;

TEST(MeanSpin, TwoQubitClosedForm) {
  for (double a : {0.1, 0.6, 0.93}) {
    const auto e = an::mean_spin({2, 1, a});
    const double b = std::sqrt(1.0 - a * a);
    EXPECT_NEAR(e.sx, 2.0 * a * b / (1.0 + a * a), 1e-15);
    EXPECT_NEAR(e.sz, 2.0 * a * a / (1.0 + a * a), 1e-15);
    EXPECT_EQ(e.sy, 0.0);
  }
  const auto e = an::mean_spin({2, 1, 0.6});
  EXPECT_NEAR(e.sx, 12.0 / 17.0, 1e-15);
  EXPECT_NEAR(e.sz, 9.0 / 17.0, 1e-15);
}

TEST(MeanSpin, OrthogonalSpinorsGiveAxialSpin) {
  const auto e = an::mean_spin({3, 2, 0.0});
  EXPECT_EQ(e.sx, 0.0);
  EXPECT_NEAR(e.sz, 0.5, 1e-15);
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto d = an::mean_spin({n, k, 0.0});
      EXPECT_EQ(d.sx, 0.0);
      EXPECT_NEAR(d.sz, k - 0.5 * n, 1e-12);
    }
  }
}

TEST(MeanSpin, MatchesBruteForce) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      for (double a : {0.15, 0.5, 0.85}) {
        const auto e = an::mean_spin({n, k, a});
        const auto m = bf::moments(n, k, a);
        EXPECT_NEAR(e.sx, m.mean[0], 1e-12);
        EXPECT_NEAR(e.sz, m.mean[2], 1e-12);
        EXPECT_NEAR(m.mean[1], 0.0, 1e-12);
      }
    }
  }
}

TEST(MeanSpin, NormBoundedAndApproachesCoherentLength) {
  for (int n : {4, 9, 30}) {
    for (int k = 1; k < n; ++k) {
      for (double a : {0.05, 0.4, 0.8}) {
        const auto e = an::mean_spin({n, k, a});
        EXPECT_GT(e.norm, 0.0);
        EXPECT_LE(e.norm, 0.5 * n + 1e-12);
      }
      EXPECT_NEAR(an::mean_spin({n, k, 0.999999}).norm, 0.5 * n, 1e-3 * n);
    }
  }
}

TEST(Frame, AxisAlignedCase) {
  const auto f = an::frame(dsq::SpinExpectation::from_components(0.0, 0.0, 0.5), 3);
  EXPECT_EQ(f.n0, (dsq::Vec3{0, 0, 1}));
  EXPECT_EQ(f.n1, (dsq::Vec3{0, 1, 0}));
  EXPECT_EQ(f.n2, (dsq::Vec3{-1, 0, 0}));
}

TEST(Frame, TwoQubitExample) {
  const auto f = an::frame(an::mean_spin({2, 1, 0.6}), 2);
  EXPECT_NEAR(f.n0[0], 0.8, 1e-15);
  EXPECT_NEAR(f.n0[2], 0.6, 1e-15);
  EXPECT_NEAR(f.n2[0], -0.6, 1e-15);
  EXPECT_NEAR(f.n2[2], 0.8, 1e-15);
}

TEST(Frame, NullMeanSpinThrows) {
  try {
    (void)an::frame(an::mean_spin({2, 1, 0.0}), 2);
    FAIL() << "expected throw";
  } catch (const dsq::Error& e) {
    EXPECT_EQ(e.kind(), dsq::ErrorKind::undefined_mean_spin);
  }
}

TEST(FrameCoefficients, WorkedValues) {
  const auto m0 = an::frame_coefficients(an::mean_spin({3, 2, 0.0}), 0.0, 3);
  EXPECT_NEAR(m0.m1, 0.0, 1e-15);
  EXPECT_NEAR(m0.m2, -1.0, 1e-15);
  EXPECT_NEAR(m0.m3, 0.0, 1e-15);

  // n2 rotated into the single-qubit frame: (0.8, 0, -0.8, ...) -> m3 = -0.8
  const auto m = an::frame_coefficients(an::mean_spin({2, 1, 0.6}), 0.6, 2);
  EXPECT_NEAR(m.m1, 0.8, 1e-15);
  EXPECT_NEAR(m.m2, 0.0, 1e-15);
  EXPECT_NEAR(m.m3, -0.8, 1e-15);
}

TEST(PerpVariance, WorkedValues) {
  EXPECT_NEAR(an::perp_variance_min({3, 2, 0.0}), 1.75, 1e-14);
  // Dicke transverse variance (s(s+1) - m^2)/2 at s = 3/2, m = 1/2
  EXPECT_NEAR(an::perp_variance_min({3, 2, 0.0}), (1.5 * 2.5 - 0.25) / 2.0, 1e-14);
  EXPECT_NEAR(an::perp_variance_min({2, 1, 0.6}), 0.264706, 1e-6);
  EXPECT_NEAR(an::perp_variance_min({2, 1, 0.6}), 4.5 / 17.0, 1e-15);
}

TEST(PerpVariance, MatchesBruteForce) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      for (double a : {0.1, 0.45, 0.7, 0.95}) {
        const double ref = bf::perp_min(bf::moments(n, k, a));
        EXPECT_NEAR(an::perp_variance_min({n, k, a}), ref, 1e-11 * std::max(1.0, ref)) << n << k << a;
      }
    }
  }
}

TEST(Squeezing, WorkedValues) {
  const auto d = an::squeezing_parameter({3, 2, 0.0});
  ASSERT_TRUE(d.xi);
  EXPECT_NEAR(*d.xi, 2.0 * std::sqrt(7.0 / 12.0), 1e-12);
  EXPECT_EQ(d.verdict, dsq::Verdict::not_squeezed);

  const auto s = an::squeezing_parameter({2, 1, 0.6});
  ASSERT_TRUE(s.xi);
  EXPECT_NEAR(*s.xi, 0.7276, 1e-3);
  EXPECT_EQ(s.verdict, dsq::Verdict::squeezed);
  EXPECT_EQ(s.method, dsq::Method::analytic);
  EXPECT_NEAR(s.phi_opt, M_PI / 2, 1e-15);

  const auto u = an::squeezing_parameter({6, 3, 0.0});
  EXPECT_EQ(u.verdict, dsq::Verdict::undefined_mean_spin);
  EXPECT_FALSE(u.xi);
  EXPECT_TRUE(std::isnan(u.perp_variance_min));

  const auto w = an::squeezing_parameter({6, 1, 0.0});
  ASSERT_TRUE(w.xi);
  EXPECT_GT(*w.xi, 1.0);
}

TEST(Squeezing, MonotoneInKAtEightQubits) {
  for (int i = 10; i <= 90; ++i) {
    const double a = 0.01 * i;
    double prev = INFINITY;
    for (int k = 1; k <= 4; ++k) {
      const double xi = *an::squeezing_parameter({8, k, a}).xi;
      EXPECT_LE(xi, prev + 1e-12) << "k=" << k << " a=" << a;
      prev = xi;
    }
  }
}

// Close to the Dicke limit the ordering in k does not hold.
TEST(Squeezing, OrderingInKBreaksNearOrthogonalSpinors) {
  const double a = 0.05;
  EXPECT_GT(*an::squeezing_parameter({8, 2, a}).xi, *an::squeezing_parameter({8, 1, a}).xi);
}

TEST(Squeezing, ExchangeSymmetry) {
  for (int n : {7, 20, 105}) {
    for (int k = 1; k < n; ++k) {
      for (double a : {0.2, 0.6}) {
        EXPECT_NEAR(*an::squeezing_parameter({n, k, a}).xi, *an::squeezing_parameter({n, n - k, a}).xi, 1e-10);
      }
    }
  }
}

TEST(Squeezing, FiniteAtLargestSupportedN) {
  for (int k : {1, 75, 150, 299}) {
    for (double a : {0.01, 0.5, 0.995}) {
      const auto r = an::squeezing_parameter({300, k, a});
      ASSERT_TRUE(r.xi);
      EXPECT_TRUE(std::isfinite(*r.xi));
      EXPECT_GT(*r.xi, 0.0);
    }
  }
}

TEST(Squeezing, PerturbationHookMovesResult) {
  const dsq::DickeClassConfig cfg{6, 2, 0.5};
  const double base = an::perp_variance_min(cfg);
  const double moved = an::perp_variance_min(cfg, {1e-6});
  EXPECT_GT(std::abs(moved - base), 1e-10);
}
