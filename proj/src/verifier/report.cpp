#include "rbi/verifier/report.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rbi/errors.hpp"

namespace rbi {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

std::string render_json(const std::vector<CheckReport>& reports, const SuiteConfig& cfg) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["version"] = "1";
  doc["suite"] = cfg.suite;
  doc["seed"] = cfg.seed;
  doc["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["statement"] = r.statement;
    j["anchor"] = r.anchor;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["status"] = to_string(r.status);
    if (r.status != CheckStatus::Pass) j["residual"] = r.residual;
    if (!r.value.empty()) j["value"] = r.value;
    if (cfg.timings) j["elapsed_ms"] = r.elapsed_ms;
    doc["reports"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << r.check_id << ' ' << to_string(r.status) << ' ' << r.elapsed_ms << "ms\n";
  return os.str();
}

void emit_report(const std::vector<CheckReport>& reports, const SuiteConfig& cfg) {
  const std::string text = cfg.format == "json" ? render_json(reports, cfg) : render_text(reports);
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw Error("failed writing '" + cfg.out + "'");
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != CheckStatus::Pass) return 1;
  }
  return 0;
}

}  // namespace rbi
