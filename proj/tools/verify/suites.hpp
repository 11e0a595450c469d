#pragma once

#include "cochain/spaces.hpp"

#include <json.hpp>

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace cochain::verify {

using nlohmann::json;

/// Raised for invalid suite configurations (the CLI maps it to exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kHardMaxN = 4;

struct SuiteConfig {
  std::vector<int> n_values{1, 2, 3};
  std::vector<int> r_values{1, 2};
  std::vector<int> k_values;  // empty: every 0 <= k <= n-1
  std::vector<Family> families{Family::full, Family::trimmed};
  std::vector<std::string> suites;  // empty: all
  std::uint64_t seed = 1;
  int oracle_points = 5;
  bool allow_slow = false;
};

/// Throws ConfigError when a value is out of the supported range or the
/// (n, r) grid leaves the default envelope without allow_slow.
void validate(const SuiteConfig& config);

const std::vector<std::string>& suite_names();

/// Outcome of one family of assertions. Only the first few counterexamples
/// are kept.
struct CheckResult {
  std::string name;
  bool assertable = true;
  long passed = 0;
  long failed = 0;
  json counterexamples = json::array();
  json findings = json::object();

  void record(bool ok, const json& payload);
  json to_json() const;
};

struct SuiteResult {
  std::string name;
  std::deque<CheckResult> checks;  // references from check() stay valid

  CheckResult& check(const std::string& check_name, bool assertable = true);
  /// False iff an assertable check has failures.
  bool passed() const;
  json to_json() const;
};

SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

struct VerifyOutcome {
  json report;
  bool passed = true;
  std::vector<SuiteResult> suites;
  std::vector<double> seconds;  // wall time per suite, kept out of the report
};

VerifyOutcome run_verify(const SuiteConfig& config);

}  // namespace cochain::verify
