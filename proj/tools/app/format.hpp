#pragma once

#include <string>

namespace dsq::app {

/// Shortest-safe round-trip text for CSV: 17 significant digits, '.' decimal
/// point regardless of the global locale.
std::string format_sig17(double v);

/// Fixed-point text with the given number of decimals, locale independent.
std::string format_fixed(double v, int decimals);

}  // namespace dsq::app
