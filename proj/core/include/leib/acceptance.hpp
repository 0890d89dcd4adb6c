#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace leib {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail; // summary on success, first failure otherwise
  std::int64_t ms = 0;
  std::int64_t budget_ms = 0;
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  std::uint32_t workers = 0;
  std::vector<CriterionResult> results;

  bool all_pass() const;
};

/// The full acceptance battery: nine criteria, each with a wall-clock budget
/// pinned here in code.  A criterion fails if any of its checks fails, it
/// throws, or it overruns its budget.  Every randomized draw goes through the
/// given seed, so reports are reproducible; workers only affects speed.
AcceptanceReport run_acceptance(std::uint64_t seed, std::uint32_t workers);

} // namespace leib
