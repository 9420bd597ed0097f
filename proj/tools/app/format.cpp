#include "app/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace dsq::app {

std::string format_sig17(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

std::string format_fixed(double v, int decimals) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  return {buf.data(), res.ptr};
}

}  // namespace dsq::app
