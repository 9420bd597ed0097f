#include "app/csv.hpp"

#include "app/format.hpp"

namespace dsq::app {

std::string csv_row(const SqueezingReport& r) {
  const bool defined = r.verdict != Verdict::undefined_mean_spin;
  std::string line;
  line += std::to_string(r.config.n);
  line += ',';
  line += std::to_string(r.config.k);
  line += ',';
  line += format_sig17(r.config.a);
  line += ',';
  line += format_sig17(r.mean_spin.sx);
  line += ',';
  line += format_sig17(r.mean_spin.sz);
  line += ',';
  if (defined) line += format_sig17(r.perp_variance_min);
  line += ',';
  if (defined && r.xi) line += format_sig17(*r.xi);
  line += ',';
  line += to_string(r.method);
  line += ',';
  line += to_string(r.verdict);
  return line;
}

void write_csv(std::ostream& out, const std::vector<SqueezingReport>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

}  // namespace dsq::app
