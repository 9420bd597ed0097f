#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsq {

enum class ErrorKind {
  n_out_of_range,
  k_out_of_range,
  a_out_of_range,
  binomial_out_of_range,
  undefined_mean_spin,
  dimension_mismatch,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries exactly one ErrorKind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dsq
