#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kpave/matroid.hpp"
#include "kpave/syndrome.hpp"

namespace kpave {

enum class SearchMode { max_size, nonexistence, enumerate };
enum class SeedColumns { identity, none };

std::string_view to_string(SearchMode mode);
std::optional<SearchMode> parse_search_mode(std::string_view text);

struct SearchConfig {
  int q = 2;
  int r = 0;
  int k = 0;
  SearchMode mode = SearchMode::max_size;
  /// nonexistence: smallest size of interest (default r + 2);
  /// enumerate: smallest size collected (default r + 1).
  std::optional<int> size_target;
  std::uint64_t node_budget = 100'000'000;
  int workers = 1;
  SeedColumns seed = SeedColumns::identity;
  /// max-size only: ignore the circuit U_{r,r+1} as a candidate answer.
  bool exclude_circuit = false;
  /// enumerate only.
  std::size_t max_certificates = 1000;

  /// Throws std::invalid_argument / CapacityError on bad configurations.
  void validate() const;
};

enum class NonexistenceStatus { confirmed, counterexample, inconclusive };
std::string_view to_string(NonexistenceStatus status);

struct SearchResult {
  SearchConfig config;
  /// Largest verified size found (0 when nothing qualified).
  int best_size = 0;
  std::optional<MatroidRep> certificate;
  /// enumerate mode: every qualifying column set in lexicographic order.
  std::vector<MatroidRep> certificates;
  /// The whole space was explored (no node-budget cut).
  bool exhausted = false;
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds wall_time{0};
  /// nonexistence mode only.
  std::optional<NonexistenceStatus> status;
};

/// Column set S over GF(q)^r with a table of the fewest columns of S
/// needed to reach each vector (capped at r - k). Adding v keeps every
/// circuit larger than r - k iff v needs at least r - k columns of S.
class FeasibilityState {
 public:
  FeasibilityState(FieldSpec field, int r, int k);

  const SyndromeSpace& space() const { return space_; }
  int threshold() const { return threshold_; }
  std::span<const std::uint32_t> columns() const { return columns_; }

  bool feasible(std::uint32_t v) const;
  void push(std::uint32_t v);
  void pop();

 private:
  SyndromeSpace space_;
  std::uint8_t threshold_;
  std::vector<std::uint32_t> columns_;
  std::vector<std::vector<std::uint8_t>> dist_;  // one table per depth
};

/// True iff S + {v} keeps local girth of v above r - k.
inline bool incremental_feasible(const FeasibilityState& state, std::uint32_t v) {
  return state.feasible(v);
}

/// r x |codes| matrix whose columns are the encoded vectors.
MatroidRep matroid_from_codes(const FieldSpec& field, int r, std::span<const std::uint32_t> codes);

SearchResult max_kpaving_size(const SearchConfig& config);
SearchResult nonexistence(const SearchConfig& config);
SearchResult enumerate_kpaving(const SearchConfig& config);
/// Dispatches on config.mode.
SearchResult run_search(const SearchConfig& config);

}  // namespace kpave
