// Runs every verification suite once and prints one PASS/FAIL line each;
// failing suites also dump their check lines. Exit status is the number of
// failing suites. Suites with a stated runtime budget fail when they exceed
// it. DCX_ACCEPT_SEED overrides the fixed default seed.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "dcx/suites.hpp"

int main() {
  std::uint64_t seed = 2026;
  if (const char* s = std::getenv("DCX_ACCEPT_SEED")) seed = std::strtoull(s, nullptr, 10);

  const std::map<std::string, double> budgets = {
      {"builtin-counts", 5.0}, {"maximality", 60.0},   {"counterexample", 1.0},
      {"random-pairs", 300.0}, {"scan-rank3", 600.0},
  };

  int failures = 0;
  for (const std::string& name : dcx::suite_names()) {
    auto start = std::chrono::steady_clock::now();
    dcx::SuiteResult result = dcx::run_suite(name, seed);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = result.passed;
    auto budget = budgets.find(name);
    if (budget != budgets.end() && elapsed > budget->second) ok = false;

    std::printf("%s %s (%.2f s)\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed);
    if (!ok) {
      ++failures;
      for (std::size_t pos = 0; pos < result.report.size();) {
        std::size_t end = result.report.find('\n', pos);
        if (end == std::string::npos) end = result.report.size();
        std::printf("  %s\n", result.report.substr(pos, end - pos).c_str());
        pos = end + 1;
      }
      if (budget != budgets.end() && elapsed > budget->second)
        std::printf("  over budget: %.2f s > %.0f s\n", elapsed, budget->second);
    }
  }
  return failures;
}
