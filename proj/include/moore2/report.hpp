#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moore2 {

// Outcome of an exhaustive difference-multiset check. Carries the full
// multiplicity table so callers can show exactly where a candidate fails,
// plus one human-readable line per violation.
struct VerificationReport {
  bool valid = false;
  std::vector<int64_t> multiplicities;  // indexed by residue, or by flattened pair
  std::vector<std::string> failures;
};

}  // namespace moore2
