#pragma once

#include <string>
#include <vector>

namespace betti {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // counterexample descriptions

  bool passed() const { return failures.empty(); }
};

/// khovanskii-closed-forms, mv-oracles, identities, chern.
std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name);

}  // namespace betti
