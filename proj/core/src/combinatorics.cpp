#include "dsq/combinatorics.hpp"

#include <algorithm>
#include <string>
#include <vector>


namespace dsq {

namespace {

void require_supported(int n) {
  if (n < 0 || n > kMaxBinomialN) {
    throw Error(ErrorKind::binomial_out_of_range,
                "binomial upper index " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxBinomialN) + "]");
  }
}

// Row n starts at offset n(n+1)/2.
class BinomialTable {
 public:
  BinomialTable() {
    const std::size_t rows = kMaxBinomialN + 1;
    values_.reserve(rows * (rows + 1) / 2);
    std::vector<ExactInteger> row{1};
    for (int n = 0; n <= kMaxBinomialN; ++n) {
      for (const auto& v : row) values_.push_back(v.convert_to<double>());
      std::vector<ExactInteger> next(row.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
      row = std::move(next);
    }
  }

  double at(int n, int k) const {
    const auto base = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2;
    return values_[base + static_cast<std::size_t>(k)];
  }

 private:
  std::vector<double> values_;
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}


}  // namespace

ExactInteger binomial(int n, int k) {
  require_supported(n);
  if (k < 0 || k > n) return 0;
  const int kk = std::min(k, n - k);
  ExactInteger result = 1;
  // result stays C(n - kk + i, i), so every division is exact.
  for (int i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

double binomial_term(int n, int k) {
  if (n > kMaxBinomialN) require_supported(n);
  if (n < 0 || k < 0 || k > n) return 0.0;
  return table().at(n, k);
}

double normalization_sq(const DickeClassConfig& cfg) {
  validate(cfg, Domain::analytic);
  const double x = cfg.a * cfg.a;
  CompensatedSum acc;
  double xr = 1.0;
  const int m = cfg.n - cfg.k;
  for (int r = 0; r <= m; ++r) {
    acc.add(binomial_term(cfg.k, r) * binomial_term(m, r) * xr);
    xr *= x;
  }
  return binomial_term(cfg.n, cfg.k) * acc.value();
}

ExactRational normalization_sq_exact(int n, int k, const ExactRational& a_squared) {
  require_supported(n);
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::k_out_of_range, "k must lie in [1, N-1]");
  }
  if (a_squared < 0 || a_squared >= 1) {
    throw Error(ErrorKind::a_out_of_range, "a^2 must lie in [0, 1)");
  }
  ExactRational sum = 0;
  ExactRational xr = 1;
  for (int r = 0; r <= n - k; ++r) {
    sum += ExactRational(binomial(k, r) * binomial(n - k, r)) * xr;
    xr *= a_squared;
  }
  return ExactRational(binomial(n, k)) * sum;
}

}  // namespace dsq
