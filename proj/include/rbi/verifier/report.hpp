#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbi/verifier/config.hpp"

namespace rbi {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string check_id;   // "<area>.<object>.<relation>"
  std::string statement;  // the identity in words
  std::string anchor;     // which family of identities this belongs to
  std::vector<std::pair<std::string, std::string>> params;  // name -> "p/q" or "symbolic"
  CheckStatus status = CheckStatus::Error;
  std::string residual;  // normal form of lhs - rhs on fail, message on error
  std::string value;     // computed quantity, when the check has one
  std::int64_t elapsed_ms = 0;
};

/// {"version":"1","suite":...,"seed":...,"reports":[...]} with reports in
/// the given order; elapsed_ms only when `timings` is set.
std::string render_json(const std::vector<CheckReport>& reports, const SuiteConfig& cfg);
/// One "<check_id> <status> <elapsed_ms>ms" line per report.
std::string render_text(const std::vector<CheckReport>& reports);

/// Writes in cfg.format to cfg.out, or stdout when cfg.out is empty. Throws
/// Error on I/O failure.
void emit_report(const std::vector<CheckReport>& reports, const SuiteConfig& cfg);

/// 0 when every report passes, 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

}  // namespace rbi
