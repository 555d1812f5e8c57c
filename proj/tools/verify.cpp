#include <iostream>
#include <string>
#include <vector>

#include "rbi/errors.hpp"
#include "rbi/verifier/config.hpp"
#include "rbi/verifier/report.hpp"
#include "rbi/verifier/suites.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const rbi::SuiteConfig cfg = rbi::parse_config(args);
    const auto reports = rbi::run_suite(cfg);
    rbi::emit_report(reports, cfg);
    return rbi::exit_status(reports);
  } catch (const rbi::HelpRequested& h) {
    std::cout << h.text;
    std::cout << "\nsuites: all";
    for (const auto& name : rbi::suite_names()) std::cout << ", " << name;
    std::cout << "\n";
    return 0;
  } catch (const rbi::ConfigError& e) {
    std::cerr << "rbi-verify: " << e.what() << "\n";
    return 2;
  } catch (const rbi::UnknownSuite& e) {
    std::cerr << "rbi-verify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rbi-verify: " << e.what() << "\n";
    return 1;
  }
}
