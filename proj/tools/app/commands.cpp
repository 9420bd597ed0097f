#include "app/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "app/config_file.hpp"
#include "app/csv.hpp"
#include "app/figures.hpp"
#include "app/format.hpp"
#include "dsq/analytic.hpp"
#include "dsq/oracle.hpp"

namespace dsq::app {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_report(const SqueezingReport& r, std::ostream& out) {
  const bool defined = r.verdict != Verdict::undefined_mean_spin;
  out << "N = " << r.config.n << '\n'
      << "k = " << r.config.k << '\n'
      << "a = " << format_sig17(r.config.a) << '\n'
      << "method = " << to_string(r.method) << '\n'
      << "sx = " << format_sig17(r.mean_spin.sx) << '\n'
      << "sy = " << format_sig17(r.mean_spin.sy) << '\n'
      << "sz = " << format_sig17(r.mean_spin.sz) << '\n'
      << "mean_spin_norm = " << format_sig17(r.mean_spin.norm) << '\n'
      << "perp_variance_min = " << (defined ? format_sig17(r.perp_variance_min) : "") << '\n'
      << "phi_opt = " << (defined ? format_sig17(r.phi_opt) : "") << '\n'
      << "xi = " << (defined && r.xi ? format_sig17(*r.xi) : "") << '\n'
      << "verdict = " << to_string(r.verdict) << '\n';
}

int report_error(const Error& e, std::ostream& err) {
  err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  return e.kind() == ErrorKind::undefined_mean_spin ? kExitUndefined : kExitValidation;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw UsageError("cannot parse --" + key + " value '" + text + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in --" + key);
    out.push_back(parse_number<int>(key, item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw UsageError("--" + key + " is empty");
  return out;
}

// Flag values layered over the config file; flags win.
class Settings {
 public:
  Settings(ConfigMap config, std::map<std::string, std::string> flags) : values_(std::move(config)) {
    for (auto& [k, v] : flags) values_[k] = v;
  }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw UsageError("missing required --" + key);
    return *v;
  }

  template <typename T>
  T number(const std::string& key) const {
    return parse_number<T>(key, require(key));
  }

  template <typename T>
  T number_or(const std::string& key, T fallback) const {
    const auto v = get(key);
    return v ? parse_number<T>(key, *v) : fallback;
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace

int cmd_xi(const XiOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    validate(opts.cfg, Domain::analytic);
    std::vector<SqueezingReport> reports;
    if (opts.method != SweepMethod::oracle) reports.push_back(analytic::squeezing_parameter(opts.cfg));
    if (opts.method != SweepMethod::analytic) {
      reports.push_back(oracle::squeezing_parameter_oracle(opts.cfg));
      reports.push_back(oracle::squeezing_parameter_scan(opts.cfg, opts.scan_steps));
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) out << '\n';
      print_report(reports[i], out);
    }
    if (reports.front().verdict == Verdict::undefined_mean_spin) {
      err << "mean spin is a null vector; xi is undefined for N=" << opts.cfg.n << ", k=" << opts.cfg.k
          << ", a=" << format_sig17(opts.cfg.a) << '\n';
      return kExitUndefined;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<SqueezingReport> rows;
  try {
    rows = run_sweep(spec);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  if (out_path.empty() || out_path == "-") {
    write_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  write_csv(file, rows);
  file.close();
  if (!file) {
    err << "error: failed writing '" << out_path << "'\n";
    return kExitUsage;
  }
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return kExitOk;
}

int cmd_figure(const std::string& which, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto spec = figure_spec(which);
  if (!spec) {
    err << "error: unknown figure id '" << which << "' (expected one of:";
    for (const auto& id : figure_ids()) err << ' ' << id;
    err << ")\n";
    return kExitUsage;
  }
  const std::string svg_path = out_path.empty() ? which + ".svg" : out_path;
  const std::string csv_path = companion_csv_path(svg_path);
  FigureOutput fig;
  try {
    fig = build_figure(*spec);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  std::ofstream svg(svg_path, std::ios::binary);
  std::ofstream csv(csv_path, std::ios::binary);
  if (!svg || !csv) {
    err << "error: cannot write '" << svg_path << "' / '" << csv_path << "'\n";
    return kExitUsage;
  }
  svg << fig.svg;
  write_csv(csv, fig.rows);
  out << "wrote " << svg_path << " and " << csv_path << " (" << fig.rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.max_n < 2 || opts.max_n > kMaxFullHilbertN) {
    err << "error (n_out_of_range): --max-n must lie in [2, " << kMaxFullHilbertN << "]\n";
    return kExitValidation;
  }
  if (opts.scan_steps < 360) {
    err << "error (invalid_argument): --steps must be at least 360\n";
    return kExitValidation;
  }
  const auto results = run_verify(opts);
  std::vector<std::string> failed;
  for (const auto& r : results) {
    out << std::left << std::setw(26) << r.name << std::right << std::setw(6) << r.passed << '/' << std::left
        << std::setw(6) << r.total << (r.ok() ? "pass" : "FAIL") << "  (" << format_fixed(r.seconds, 3) << " s)\n";
    for (const auto& f : r.failures) out << "    failed: " << f << '\n';
    if (!r.ok()) failed.push_back(r.name);
  }
  if (failed.empty()) {
    out << "verify: " << results.size() << " of " << results.size() << " suites passed\n";
    return kExitOk;
  }
  out << "verify: FAILED suites:";
  for (const auto& f : failed) out << ' ' << f;
  out << '\n';
  return kExitVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin squeezing of Dicke-class states"};
  app.require_subcommand(1);

  std::map<std::string, std::string> flags;
  std::string config_path;
  const auto text_flag = [&flags](CLI::App* cmd, const std::string& name, const std::string& help) {
    cmd->add_option_function<std::string>("--" + name, [&flags, name](const std::string& v) { flags[name] = v; },
                                          help);
  };

  auto* xi = app.add_subcommand("xi", "Evaluate xi for a single configuration");
  auto* sweep = app.add_subcommand("sweep", "Evaluate xi on a (k, a) grid and write CSV");
  auto* figure = app.add_subcommand("figure", "Reproduce a figure as SVG plus CSV");
  auto* verify = app.add_subcommand("verify", "Run the verification suites");

  for (auto* cmd : {xi, sweep, figure, verify}) {
    cmd->add_option("--config", config_path, "key = value file mirroring the flags");
  }
  text_flag(xi, "n", "qubit count N");
  text_flag(xi, "k", "multiplicity of |0>");
  text_flag(xi, "a", "spinor parameter a in [0, 1)");
  text_flag(xi, "method", "analytic | oracle | both");
  text_flag(xi, "steps", "angle-scan resolution for the oracle");

  text_flag(sweep, "n", "qubit count N");
  text_flag(sweep, "k-list", "comma-separated k values");
  text_flag(sweep, "a-start", "first a (default 0)");
  text_flag(sweep, "a-end", "last a (default 0.995)");
  text_flag(sweep, "a-steps", "number of a points (default 200)");
  text_flag(sweep, "method", "analytic | oracle | both");
  text_flag(sweep, "out", "output CSV path, '-' for stdout");

  std::string which;
  figure->add_option("which", which, "fig1a | fig1b | fig2a | fig2b | fig3a | fig3b");
  text_flag(figure, "out", "output SVG path (CSV written alongside)");

  bool tables_only = false;
  text_flag(verify, "max-n", "largest N for the grid suites (2..12, default 10)");
  text_flag(verify, "steps", "angle-scan resolution (default 3600)");
  verify->add_flag("--tables-only", tables_only, "only check the per-configuration tables");
  text_flag(verify, "inject-perturbation", "");
  verify->get_option("--inject-perturbation")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ConfigMap config;
    if (!config_path.empty()) config = load_config(config_path);
    const Settings s(std::move(config), flags);

    if (xi->parsed()) {
      XiOptions opts;
      opts.cfg = {s.number<int>("n"), s.number<int>("k"), s.number<double>("a")};
      opts.method = parse_sweep_method(s.get("method").value_or("analytic"));
      opts.scan_steps = s.number_or<int>("steps", oracle::kDefaultScanSteps);
      if (opts.scan_steps < 360) throw Error(ErrorKind::invalid_argument, "--steps must be at least 360");
      return cmd_xi(opts, out, err);
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.n = s.number<int>("n");
      spec.k_list = parse_int_list("k-list", s.require("k-list"));
      spec.a_start = s.number_or<double>("a-start", 0.0);
      spec.a_end = s.number_or<double>("a-end", 0.995);
      spec.a_steps = s.number_or<int>("a-steps", 200);
      spec.method = parse_sweep_method(s.get("method").value_or("analytic"));
      return cmd_sweep(spec, s.get("out").value_or("-"), out, err);
    }
    if (figure->parsed()) {
      if (which.empty()) which = s.get("which").value_or("");
      if (which.empty()) throw UsageError("figure id required");
      return cmd_figure(which, s.get("out").value_or(""), out, err);
    }
    VerifyOptions opts;
    opts.max_n = s.number_or<int>("max-n", 10);
    opts.scan_steps = s.number_or<int>("steps", oracle::kDefaultScanSteps);
    opts.tables_only = tables_only || s.get("tables-only").value_or("false") == "true";
    opts.eval.sx_sum_perturbation = s.number_or<double>("inject-perturbation", 0.0);
    return cmd_verify(opts, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dsq::app
