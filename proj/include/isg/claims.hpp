#pragma once

#include <string>
#include <vector>

#include "isg/json_io.hpp"

namespace isg {

/// One executable entry of the claims catalog. `check` describes what to
/// run; `status` is the cataloged expectation: "verified" entries must PASS,
/// "known_discrepancy" entries must fail the literal value from the source
/// text and pass the stored derived one.
struct ClaimEntry {
  std::string id;
  std::string note;
  std::string status;  // "verified" | "known_discrepancy"
  json check;
};

struct ClaimResult {
  std::string id;
  std::string verdict;  // "PASS" | "KNOWN_DISCREPANCY" | "FAIL"
  std::string detail;
};

std::vector<ClaimEntry> load_claims(const std::string& path);

ClaimResult run_claim(const ClaimEntry& entry);

/// Runs every entry whose id starts with `prefix` (all when empty), ordered
/// by id. Raises invalid_input when the prefix matches nothing.
std::vector<ClaimResult> run_claims(const std::vector<ClaimEntry>& entries,
                                    const std::string& prefix);

}  // namespace isg
