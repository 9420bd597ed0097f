#pragma once

#include <istream>
#include <map>
#include <string>

namespace dsq::app {

/// `key = value` lines. '#' starts a comment anywhere on a line; blank lines
/// are skipped. Keys are the long flag names without the leading dashes.
/// A later duplicate key replaces an earlier one.
using ConfigMap = std::map<std::string, std::string>;

/// Throws std::runtime_error naming the offending line on malformed input.
ConfigMap parse_config(std::istream& in);
ConfigMap load_config(const std::string& path);

}  // namespace dsq::app
