#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rankmod/systematic.hpp"

namespace rankmod {

struct PropertyResult {
  std::string name;
  std::string suite;
  std::string statement;
  std::uint64_t cases = 0;
  bool passed = true;
  /// First counterexample found, empty when passed.
  std::string counterexample;
};

struct VerifyOptions {
  /// Largest word length for the exhaustive metric checks.
  std::size_t max_n = 6;
  /// "all", "core" or "codes".
  std::string suite = "all";
};

/// Every exhaustive property check, in a fixed order.
std::vector<PropertyResult> verify_all(const VerifyOptions &opts = {});

/// Property name -> statement, for every check run by verify_all.
std::vector<std::pair<std::string, std::string>> coverage_manifest();

/// Invariants of a (possibly hand-edited) code: distinct redundancy words at
/// pairwise distance >= 2t, systematic encoding, minimum distance >= 2t+1.
std::vector<PropertyResult> audit_code(const SystematicCode &code);

} // namespace rankmod
