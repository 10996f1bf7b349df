#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dcx {

// One named verification suite: a deterministic battery of exact checks.
// Reports are plain text, one "ok:"/"FAIL:" line per check, and are
// byte-identical across runs with the same seed.
struct SuiteResult {
  std::string name;
  std::string report;
  bool passed = false;
};

const std::vector<std::string>& suite_names();

// Runs one suite; unknown names throw std::invalid_argument. Suites without
// randomized parts ignore the seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace dcx
