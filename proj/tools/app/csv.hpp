#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dsq/state_model.hpp"

namespace dsq::app {

inline constexpr const char* kCsvHeader = "N,k,a,sx,sz,perp_var,xi,method,verdict";

/// One line per report; xi and perp_var are empty for an undefined mean spin.
std::string csv_row(const SqueezingReport& report);

void write_csv(std::ostream& out, const std::vector<SqueezingReport>& rows);

}  // namespace dsq::app
