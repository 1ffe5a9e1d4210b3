#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpave/matroid.hpp"

namespace kpave {

enum class TheoremId { T1_1, T1_2, C1_3, T1_4, C1_6, T3_1, C3_4, C3_5 };

/// "T1.1", "C3.4", ...
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view text);
std::span<const TheoremId> all_theorems();

enum class Verdict { holds, attained, hypothesis_not_met, violation };

/// "holds", "attained", "hypothesis-not-met", "VIOLATION"
std::string_view to_string(Verdict v);

enum class Quantity { size, rank };
std::string_view to_string(Quantity q);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BoundEvaluation {
  TheoremId theorem = TheoremId::T1_1;
  int r = 0;
  std::optional<int> k;
  int q = 2;
  std::vector<HypothesisCheck> hypotheses;
  /// Alternatives in the theorem's conclusion (circuit, size-2 cocircuit);
  /// passed means the escape applies.
  std::vector<HypothesisCheck> escapes;
  Quantity quantity = Quantity::size;
  long long bound_value = 0;
  long long observed_value = 0;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::vector<std::string> notes;
  /// The offending matroid, present exactly when verdict is violation.
  std::optional<MatroidRep> certificate;

  bool all_hypotheses_pass() const;
};

/// 2^k (r - k + 1)
long long bound_size_one_loose(int r, int k);
/// (q + 1)(k - 1) + 2q; throws UnsupportedFieldError for unsupported q.
int bound_rank_two_loose(int q, int k);
/// floor((3k + 1 - r) / 2), rounding toward negative infinity.
int kpaving_sum_limit(int r, int k);
/// (r + 1) + sum_{i=0}^{t} C(k, i) with t = kpaving_sum_limit(r, k); the
/// sum is empty when t < 0.
long long bound_size_kpaving(int r, int k);
/// floor((41r - 101) / 2) for r > 10, floor((35r - 35) / 2) otherwise.
long long bound_ternary_one_loose(int r);

struct Applicability {
  bool applicable = false;
  std::string reason;
};

/// r >= 5 and 0 <= k <= (r - 2) / 3
Applicability one_loose_size_applicability(int r, int k);
/// r >= k + 4 and r <= 3k + 1
Applicability kpaving_size_applicability(int r, int k);
/// r >= 5
Applicability ternary_size_applicability(int r);

class EvaluationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the theorem's hypotheses on M, evaluates the bound against the
/// observed size or rank, and returns a verdict. Throws EvaluationError
/// when k is missing or the field does not match the theorem.
BoundEvaluation evaluate(const MatroidRep& m, TheoremId theorem, std::optional<int> k = {});

/// Same as evaluate(), but computes simplicity, coloops and local girths
/// once for many (theorem, k) queries on one matroid.
class BoundEvaluator {
 public:
  struct Facts;

  explicit BoundEvaluator(const MatroidRep& m);
  ~BoundEvaluator();
  BoundEvaluator(BoundEvaluator&&) noexcept;
  BoundEvaluator& operator=(BoundEvaluator&&) noexcept;

  BoundEvaluation evaluate(TheoremId theorem, std::optional<int> k = {}) const;
  const MatroidRep& matroid() const { return m_; }

 private:
  MatroidRep m_;
  std::unique_ptr<const Facts> facts_;
};

/// Whether the theorem takes k as a parameter (C1.6 and T3.1 fix it).
bool theorem_takes_k(TheoremId theorem);
/// Field order the theorem is restricted to, if any.
std::optional<int> theorem_field(TheoremId theorem);

}  // namespace kpave
