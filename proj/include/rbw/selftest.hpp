#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rbw/io.hpp"

namespace rbw::selftest {

/// Returns a failure description, or nothing when the check passes.
using CheckFn = std::function<std::optional<std::string>()>;

struct Check {
  std::string name;
  std::string description;
  CheckFn run;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The reference values built into the library: boosts, interferometer
/// states, reconstruction theorems, bracket tables.
std::vector<Check> builtin_checks();

/// Structural and numerical checks for a group document on disk: loads it,
/// then verifies every irrep, orthogonality and the resolution identity.
std::vector<Check> group_document_checks(const std::string& path, double tolerance);

std::vector<CheckResult> run(const std::vector<Check>& checks);

}  // namespace rbw::selftest
