#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symrig/algebra.hpp"

namespace symrig {

enum class CheckStatus { kPass, kFail, kSkip };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  /// Always set for failures; passing checks may carry a record too.
  std::optional<std::string> witness;
  /// Zero unless timings were requested, so reports stay reproducible.
  long long duration_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// Sorted by name.
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  const CheckRecord* find(const std::string& name) const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  /// Restricts algebra-indexed checks to one tag.
  std::optional<AlgebraTag> algebra;
  /// Exact elimination for the OC derivation system (otherwise two primes).
  bool deep = false;
  bool timings = false;
  /// Receives progress lines for long computations.
  std::function<void(const std::string&)> progress;
};

/// "all", "algebra", "jordan", "weights", "surfaces", "degeneration".
const std::vector<std::string>& suite_names();

/// Throws Error(kInvalidArgument) for an unknown suite.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});

std::string to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace symrig
