#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpave/matroid.hpp"
#include "kpave/syndrome.hpp"

namespace kpave {

/// Circuit size, or infinite when there is no circuit (coloops, free
/// matroids). Infinite compares greater than every finite value.
class Girth {
 public:
  static Girth infinite() { return Girth{}; }
  static Girth finite(int size) { return Girth{size}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error when infinite.
  int value() const;

  /// "inf" or the decimal size.
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;
  friend std::strong_ordering operator<=>(const Girth& a, const Girth& b);

 private:
  Girth() = default;
  explicit Girth(int v) : value_(v) {}
  std::optional<int> value_;
};

struct LocalGirth {
  Girth girth;
  /// Lexicographically smallest minimum circuit through the element;
  /// empty when the girth is infinite.
  ElementSet witness;
};

struct LooseReport {
  Label element = 0;
  Girth local_girth = Girth::infinite();
  /// Smallest k >= 0 with the element k-loose: max(0, rank - local_girth + 1).
  int looseness_index = 0;
  bool coloop = false;
  ElementSet witness;
};

struct PavingReport {
  int rank = 0;
  Girth girth = Girth::infinite();
  /// Smallest k with the matroid k-paving: max(0, rank - girth + 1).
  int paving_index = 0;
  std::vector<LooseReport> per_element;
};

struct AnalysisLimits {
  int max_binary_rank = 20;
  int max_rank = 12;
};

/// Local-girth computations on one matroid. Binary matroids use a
/// breadth-first search over the 2^rank syndrome space; other fields use
/// iterative deepening over independent column subsets.
class GirthEngine {
 public:
  explicit GirthEngine(const MatroidRep& m, AnalysisLimits limits = {});

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(columns_.size()); }

  LocalGirth local_girth(Label e) const;
  Girth local_girth_value(Label e) const;
  /// local_girth(e) > bound, searching no deeper than needed.
  bool local_girth_exceeds(Label e, int bound) const;
  Girth girth() const;

 private:
  struct Search;

  // Minimum number of other columns whose span contains column e (with
  // every coefficient nonzero), if at most max_count.
  std::optional<int> span_count(Label e, int max_count, ElementSet* witness) const;
  std::optional<int> binary_span_count(Label e, int max_count, ElementSet* witness) const;
  std::optional<int> generic_span_count(Label e, int max_count, ElementSet* witness) const;

  FieldSpec field_;
  int rank_;
  MatroidRep reduced_;
  std::vector<std::uint32_t> codes_;               // binary only
  std::vector<std::vector<Element>> columns_;      // reduced columns
};

LocalGirth local_girth(const MatroidRep& m, Label e);
Girth girth(const MatroidRep& m);
LooseReport looseness_index(const MatroidRep& m, Label e);

/// Coloops are vacuously k-loose; k >= rank makes every element k-loose.
bool is_k_loose(const MatroidRep& m, Label e, int k);
bool is_k_paving(const MatroidRep& m, int k);
PavingReport paving_report(const MatroidRep& m);

class BudgetError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 27;

/// Every circuit through e with at most size_cap elements, found by plain
/// subset enumeration with rank-based dependency and minimality checks.
/// Results are sorted lexicographically. Throws BudgetError when the
/// number of candidate subsets could exceed `budget`.
std::vector<ElementSet> circuits_through_oracle(const MatroidRep& m, Label e, int size_cap,
                                                std::uint64_t budget = kDefaultOracleBudget);

/// Outcome of checking one of the standard-form zero-count properties.
struct ZeroCountCheck {
  bool applicable = false;
  int k = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};

/// Binary M, non-coloop e with looseness index k, standard form on a basis
/// containing C - e for a minimum circuit C through e, rows permuted so the
/// k zero entries of e are on top: for every other Q column, the zeros in
/// the top k rows plus the nonzeros below number at most k + 1.
ZeroCountCheck loose_zero_count_check(const MatroidRep& m, Label e);

/// Binary M with paving index k (girth r - k + 1), standard form on a basis
/// containing C - e for a minimum circuit C: every sum of m distinct Q
/// columns, 1 <= m <= max_terms, has at most k + m - 1 zero entries.
ZeroCountCheck paving_zero_count_check(const MatroidRep& m, int max_terms = 3);

}  // namespace kpave
