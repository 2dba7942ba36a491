#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ellimod {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::size_t samples = 1000;  // random samples per type in the sampled suites
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a summary of what was checked
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means none
};

// Number of library-level criteria (the CLI criterion is checked by the
// acceptance driver around `ellimod verify`).
inline constexpr int kNumCriteria = 11;

CriterionResult run_criterion(int id, const VerifyOptions& options);

std::vector<CriterionResult> run_all_criteria(
    const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace ellimod
