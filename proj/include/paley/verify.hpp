#pragma once

// Batch property suites over every module. Each suite counts cases and
// violations; a violation means a stated property failed on a concrete input.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paley/arith.hpp"
#include "paley/graph.hpp"

namespace paley {

struct VerifyOptions {
  /// Field order for suites that sweep a single field (directions).
  std::optional<u64> q;
  bool exhaustive = false;
  u64 seed = 1;
  /// Overrides the per-suite default sample count.
  std::optional<u64> samples;
  unsigned workers = 1;
  std::chrono::milliseconds time_limit = kDefaultTimeLimit;
};

struct CheckOutcome {
  std::string name;
  u64 cases = 0;
  u64 violations = 0;
  /// Cases whose exact search hit the time limit.
  u64 timeouts = 0;
  std::vector<std::string> failures;  // first few only
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;

  u64 violations() const;
  u64 timeouts() const;
};

/// Suite names accepted by run_verify, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown suite name or unusable options.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace paley
