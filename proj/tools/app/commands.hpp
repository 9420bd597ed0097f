#pragma once

#include <ostream>
#include <string>

#include "app/sweep.hpp"
#include "app/verify.hpp"
#include "dsq/state_model.hpp"

namespace dsq::app {

/// 0 ok, 1 usage or I/O error, 2 validation error, 3 undefined mean spin,
/// 4 verification failure.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitUndefined = 3,
  kExitVerifyFailed = 4,
};

struct XiOptions {
  DickeClassConfig cfg;
  SweepMethod method = SweepMethod::analytic;
  int scan_steps = 3600;
};

int cmd_xi(const XiOptions& opts, std::ostream& out, std::ostream& err);

/// out_path "-" writes the CSV to `out`.
int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);

/// Writes the SVG to out_path (default "<id>.svg") and the CSV next to it.
int cmd_figure(const std::string& which, const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand plus flags, optional --config file) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsq::app
