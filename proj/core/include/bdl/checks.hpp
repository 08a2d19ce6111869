#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bdl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckSummary {
  std::string suite;
  std::vector<CheckResult> results;

  bool passed() const;
  std::string to_text() const;
};

/// Deterministic invariant suites with fixed seeds: "relations", "lemmas",
/// "theorem1" or "all". Failures are reported in the summary, never thrown;
/// an unknown suite name throws ParseError.
CheckSummary check_suite(std::string_view name);

CheckSummary check_relations();
CheckSummary check_lemmas();
CheckSummary check_theorem1();

/// Number of (n_1..n_m) with sum i*n_i = m, by direct enumeration.
unsigned long long enumerate_weighted_tuples(int m);

}  // namespace bdl
