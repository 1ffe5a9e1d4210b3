#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpave/report.hpp"

namespace kpave {

struct CriterionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CriterionCheck> checks;

  bool passed() const;
  /// {suite, seed, passed, checks:[{name, passed, detail}]}; no timing.
  Json to_json() const;
};

class UnknownSuiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// construction, bounds, oracle, paving-rank, table-1-6
std::span<const std::string_view> suite_names();

/// Runs one verification suite. Every random draw comes from `seed`, so
/// equal seeds give identical results.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = 0);

}  // namespace kpave
