#pragma once

// Self-verification: every algebraic property of the library checked on
// deterministic samples and bounded enumerations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bianchi/serialize.hpp"

namespace bianchi {

struct VerifyOptions {
  std::vector<std::int64_t> ms;
  long height = 2;
  std::uint64_t seed = 0;
  int samples = 50;
};

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  // First failing input, tagged with its m.
  std::optional<Json> counterexample;

  bool ok() const { return failed == 0; }
};

// Suites come back sorted by name. Throws std::invalid_argument for an invalid m.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace bianchi
