#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcent {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Negative control: swap several catalog groups for wrong ones so that
  /// the affected criteria must fail.
  bool corrupt = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t checks = 0;
  double elapsed_ms = 0;
};

inline constexpr int kCriterionCount = 11;

/// Specs exercised by the catalog-wide criteria. "S7pairs" names S_7 on
/// 2-subsets, which has no spec grammar of its own.
const std::vector<std::string>& suite_catalog();

CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

/// One line per criterion, then a summary line. Timings only on request so
/// that repeated runs produce identical bytes.
std::string format_suite(const std::vector<CriterionResult>& results, bool timings = false);

}  // namespace symcent
