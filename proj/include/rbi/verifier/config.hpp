#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbi/kernel/scalar.hpp"

namespace rbi {

struct SuiteConfig {
  std::string suite = "all";
  /// Parameter overrides by ASCII symbol name; nullopt means symbolic.
  std::map<std::string, std::optional<Rational>> params;
  long long degree = 6;  // basis size M of the matrix checks
  std::uint64_t seed = 1;
  long long trials = 50;
  std::string format = "text";
  std::string out;       // empty writes to stdout
  std::string dump_dir;  // empty disables matrix dumps
  bool timings = false;
  /// Check-id prefixes to run; empty runs the whole suite.
  std::vector<std::string> checks;
};

/// Thrown by parse_config for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

/// "k=v[,k=v...]" with v a rational "p/q" or "symbolic". Keys are symbol
/// names or their Greek aliases. Throws ConfigError.
void parse_params(std::string_view text, std::map<std::string, std::optional<Rational>>& into);

/// Applies "key=value" lines (blank lines and '#' comments ignored) on top
/// of `base`. Throws ConfigError on unknown keys and malformed values.
SuiteConfig apply_config_text(std::string_view text, SuiteConfig base);

/// Flags: --suite, --params, --degree, --seed, --trials, --out, --format,
/// --config, --dump-dir, --timings, --checks. Values from --config are read first and
/// flags override them. Throws ConfigError or HelpRequested.
SuiteConfig parse_config(const std::vector<std::string>& args);

/// Throws ConfigError when M < 0, trials < 1 or the format is unknown.
void validate(const SuiteConfig& cfg);

}  // namespace rbi
