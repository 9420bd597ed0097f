#include "app/golden_tables.hpp"

#include <cmath>

namespace dsq::app::golden {

namespace {

double b_of(double a) { return std::sqrt(1.0 - a * a); }

}  // namespace

const std::vector<MeanSpinRow>& sx_rows() {
  static const std::vector<MeanSpinRow> rows{
      {2, 1, [](double a) { return 2 * a * b_of(a) / (1 + a * a); }, false},
      {3, 2, [](double a) { return 3 * a * b_of(a) / (1 + 2 * a * a); }, false},
      {3, 1, [](double a) { return 2 * a * b_of(a) * (2 + a * a) / (1 + 2 * a * a); }, false},
      {4, 3, [](double a) { return 4 * a * b_of(a) / (1 + 3 * a * a); }, false},
      {4, 2, [](double a) { return 6 * a * b_of(a) * (1 + a * a) / (1 + 4 * a * a + std::pow(a, 4)); }, false},
      {4, 1, [](double a) { return 6 * a * b_of(a) * (1 + a * a) / (1 + 3 * a * a); }, false},
      {5, 4, [](double a) { return 5 * a * b_of(a) / (1 + 4 * a * a); }, false},
      {5, 3, [](double a) { return 4 * a * b_of(a) * (2 + 3 * a * a) / (1 + 6 * a * a + 3 * std::pow(a, 4)); }, false},
      {5, 2,
       [](double a) {
         return 3 * a * b_of(a) * (3 + 6 * a * a + std::pow(a, 4)) / (1 + 6 * a * a + 3 * std::pow(a, 4));
       },
       false},
      {5, 1, [](double a) { return 4 * a * b_of(a) * (2 + 3 * a * a) / (1 + 4 * a * a); }, false},
  };
  return rows;
}

const std::vector<MeanSpinRow>& sz_rows() {
  static const std::vector<MeanSpinRow> rows{
      {2, 1, [](double a) { return 2 * a * a / (1 + a * a); }, false},
      {3, 2, [](double a) { return (1 + 8 * a * a) / (2 * (1 + 2 * a * a)); }, false},
      {3, 1, [](double a) { return (4 * std::pow(a, 4) + 6 * a * a - 1) / (2 * (1 + 2 * a * a)); }, false},
      {4, 3, [](double a) { return (1 + 7 * a * a) / (1 + 3 * a * a); }, false},
      {4, 2, [](double a) { return (6 * std::pow(a, 4) + 6 * a * a) / (1 + 4 * a * a + std::pow(a, 4)); }, false},
      {4, 1, [](double a) { return (6 * std::pow(a, 4) + 3 * a * a - 1) / (1 + 3 * a * a); }, false},
      {5, 4, [](double a) { return (3 + 22 * a * a) / (2 * (1 + 4 * a * a)); }, false},
      {5, 3,
       [](double a) {
         return (1 + 22 * a * a + 27 * std::pow(a, 4)) / (2 * (1 + 6 * a * a + 3 * std::pow(a, 4)));
       },
       false},
      // The uncorrected numerator 6a^6 + 30a^2 + 45a^4 + 1 gives +1/2 at a = 0,
      // where the state is the Dicke state with m = -1/2.
      {5, 2,
       [](double a) {
         return (6 * std::pow(a, 6) + 33 * std::pow(a, 4) + 12 * a * a - 1) /
                (2 * (1 + 6 * a * a + 3 * std::pow(a, 4)));
       },
       true},
      {5, 1, [](double a) { return (4 * a * a + 24 * std::pow(a, 4) - 3) / (2 * (1 + 4 * a * a)); }, false},
  };
  return rows;
}

const std::vector<VarianceRow>& variance_rows() {
  using M = FrameCoefficients;
  static const std::vector<VarianceRow> rows{
      {2, 1, [](double a, const M& m) { return 0.5 + (m.m1 * m.m3 + m.m2 * m.m2) / (2 * (1 + a * a)); }, false},
      {3, 2,
       [](double a, const M& m) {
         return 0.75 + (0.5 * m.m1 * m.m1 + 2 * m.m1 * m.m2 * a + m.m1 * m.m3 + m.m2 * m.m2) / (1 + 2 * a * a);
       },
       false},
      {3, 1,
       [](double a, const M& m) {
         return 0.75 + (0.5 * m.m3 * m.m3 + 2 * m.m3 * m.m2 * a + m.m1 * m.m3 + m.m2 * m.m2) / (1 + 2 * a * a);
       },
       false},
      // The uncorrected form has denominator 2(1 + 4a^2 + a^4) and a full m1^2 term.
      {4, 2,
       [](double a, const M& m) {
         const double x = a * a;
         return 1 + (0.5 * m.m1 * m.m1 + 4 * m.m1 * m.m2 * a + m.m2 * m.m2 * x + 2 * m.m1 * m.m3 * (1 + x) +
                     2 * m.m2 * m.m2 * (1 + x) + 4 * m.m2 * m.m3 * a + 0.5 * m.m3 * m.m3) /
                        (1 + 4 * x + x * x);
       },
       true},
      {4, 1,
       [](double a, const M& m) {
         const double x = a * a;
         return 1 + 3 / (1 + 3 * x) *
                        (0.5 * m.m1 * m.m3 + 0.5 * m.m2 * m.m2 + 2 * m.m2 * m.m3 * a + 0.5 * m.m3 * m.m3 * (1 + x));
       },
       false},
      {5, 4,
       [](double a, const M& m) {
         const double x = a * a;
         return 1.25 + 4 / (1 + 4 * x) *
                           (0.5 * m.m1 * m.m3 + 0.5 * m.m2 * m.m2 + 3 * m.m2 * m.m1 * a +
                            0.75 * m.m1 * m.m1 * (1 + 2 * x));
       },
       false},
      {5, 3,
       [](double a, const M& m) {
         const double x = a * a;
         return 1.25 + (1.5 * m.m1 * m.m1 * (1 + 2 * x) + 6 * m.m1 * m.m2 * (2 + x) * a + 3 * m.m2 * m.m2 * x +
                        3 * m.m1 * m.m3 * (1 + 2 * x) + 3 * m.m2 * m.m2 * (1 + 2 * x) + 6 * m.m2 * m.m3 * a +
                        0.5 * m.m3 * m.m3) /
                           (1 + 6 * x + 3 * x * x);
       },
       false},
      {5, 2,
       [](double a, const M& m) {
         const double x = a * a;
         return 1.25 + (0.5 * m.m1 * m.m1 + 6 * m.m1 * m.m2 * a + 3 * m.m2 * m.m2 * x +
                        3 * m.m1 * m.m3 * (1 + 2 * x) + 3 * m.m2 * m.m2 * (1 + 2 * x) +
                        6 * m.m2 * m.m3 * a * (2 + x) + 1.5 * m.m3 * m.m3 * (1 + 2 * x)) /
                           (1 + 6 * x + 3 * x * x);
       },
       false},
      {5, 1,
       [](double a, const M& m) {
         const double x = a * a;
         return 1.25 + 4 / (1 + 4 * x) *
                           (0.5 * m.m1 * m.m3 + 0.5 * m.m2 * m.m2 + 3 * m.m2 * m.m3 * a +
                            0.75 * m.m3 * m.m3 * (1 + 2 * x));
       },
       false},
  };
  return rows;
}

double uncorrected_sz_5_2(double a) {
  return (6 * std::pow(a, 6) + 30 * a * a + 45 * std::pow(a, 4) + 1) / (2 * (1 + 6 * a * a + 3 * std::pow(a, 4)));
}

double uncorrected_variance_4_2(double a, const FrameCoefficients& m) {
  const double x = a * a;
  return 1 + (m.m1 * m.m1 + 4 * m.m1 * m.m2 * a + m.m2 * m.m2 * x + 2 * m.m1 * m.m3 * (1 + x) +
              2 * m.m2 * m.m2 * (1 + x) + 4 * m.m2 * m.m3 * a + 0.5 * m.m3 * m.m3) /
                 (2 * (1 + 4 * x + x * x));
}

double uncorrected_m3(const SpinExpectation& exp, double a) {
  return ((2 * a * a - 1) * exp.sx - 2 * a * exp.sz) / exp.norm;
}

}  // namespace dsq::app::golden
