#include "rbi/verifier/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "rbi/errors.hpp"
#include "rbi/kernel/symbol.hpp"

namespace rbi {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool is_parameter(Symbol s) {
  return s.index() < sym::x.index();
}

long long parse_integer(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects an integer, got '" + text + "'");
  }
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] == '-') throw std::invalid_argument(text);
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'seed' expects an unsigned integer, got '" + text + "'");
  }
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + text + "'");
}

}  // namespace

void parse_params(std::string_view text, std::map<std::string, std::optional<Rational>>& into) {
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("parameter '" + item + "' is not of the form k=v");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    const auto s = find_symbol(key);
    if (!s || !is_parameter(*s)) throw ConfigError("unknown parameter '" + key + "'");
    const std::string name(s->name());
    if (value == "symbolic") {
      into[name] = std::nullopt;
      continue;
    }
    try {
      into[name] = parse_rational(value);
    } catch (const ParseError&) {
      throw ConfigError("malformed rational '" + value + "' for parameter '" + key + "'");
    }
  }
}

SuiteConfig apply_config_text(std::string_view text, SuiteConfig cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + " has no '='");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "suite") cfg.suite = value;
    else if (key == "params") parse_params(value, cfg.params);
    else if (key == "degree") cfg.degree = parse_integer(key, value);
    else if (key == "seed") cfg.seed = parse_seed(value);
    else if (key == "trials") cfg.trials = parse_integer(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "dump-dir") cfg.dump_dir = value;
    else if (key == "timings") cfg.timings = parse_bool(key, value);
    else if (key == "checks") cfg.checks = parse_list(value);
    else throw ConfigError("unknown config key '" + key + "' on line " + std::to_string(lineno));
  }
  return cfg;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.degree < 0) throw ConfigError("degree must be >= 0");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.format != "json" && cfg.format != "text") throw ConfigError("format must be json or text");
}

SuiteConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification of Racah and Bannai-Ito algebra identities", "rbi-verify"};
  std::string suite, params, degree, seed, trials, out, format, config, dump_dir, checks;
  app.add_option("--suite", suite, "suite name or 'all'");
  app.add_option("--params", params, "k=v[,k=v...] with v a rational p/q or 'symbolic'");
  app.add_option("--degree", degree, "basis size M of the matrix checks (>= 0)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--trials", trials, "random samples per property check (>= 1)");
  app.add_option("--out", out, "output file (default: stdout)");
  app.add_option("--format", format, "json or text");
  app.add_option("--config", config, "file of key=value lines; flags override it");
  app.add_option("--dump-dir", dump_dir, "directory for matrix CSV dumps");
  app.add_option("--checks", checks, "comma-separated check-id prefixes to run");
  bool timings = false;
  app.add_flag("--timings", timings, "include elapsed_ms in JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  SuiteConfig cfg;
  if (app.count("--config")) {
    std::ifstream f(config);
    if (!f) throw ConfigError("cannot read config file '" + config + "'");
    std::ostringstream text;
    text << f.rdbuf();
    cfg = apply_config_text(text.str(), cfg);
  }
  if (app.count("--suite")) cfg.suite = suite;
  if (app.count("--params")) parse_params(params, cfg.params);
  if (app.count("--degree")) cfg.degree = parse_integer("degree", degree);
  if (app.count("--seed")) cfg.seed = parse_seed(seed);
  if (app.count("--trials")) cfg.trials = parse_integer("trials", trials);
  if (app.count("--out")) cfg.out = out;
  if (app.count("--format")) cfg.format = format;
  if (app.count("--dump-dir")) cfg.dump_dir = dump_dir;
  if (app.count("--checks")) cfg.checks = parse_list(checks);
  if (timings) cfg.timings = true;
  validate(cfg);
  return cfg;
}

}  // namespace rbi
