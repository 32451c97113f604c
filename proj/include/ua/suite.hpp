#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ua/report.hpp"

namespace ua {

struct ClaimResult {
  std::string id;
  std::string claim;
  bool holds = false;
  Json details;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cap = std::size_t{1} << 24;
  std::vector<std::string> only;  // empty runs every claim
};

/// ids in run order
std::vector<std::string> suite_claim_ids();
std::vector<ClaimResult> run_suite(const SuiteOptions& opts = {});

/// no timings, so equal inputs give equal bytes
Json suite_to_json(const std::vector<ClaimResult>& results);
/// one line per claim with its runtime
std::string suite_to_text(const std::vector<ClaimResult>& results);

}  // namespace ua
