#include "kpave/bounds.hpp"

#include <algorithm>
#include <array>

#include "kpave/field.hpp"
#include "kpave/loose.hpp"

namespace kpave {

// Structural facts about M shared by all theorem evaluations.
struct BoundEvaluator::Facts {
  int q;
  int r;
  int n;
  bool simple;
  ElementSet coloops;
  bool circuit;
  std::vector<Girth> local;  // per element
  Girth girth = Girth::infinite();

  explicit Facts(const MatroidRep& m)
      : q(m.field().order()),
        r(m.rank()),
        n(m.size()),
        simple(is_simple(m)),
        coloops(kpave::coloops(m)),
        circuit(is_circuit_matroid(m)) {
    GirthEngine engine(m);
    for (Label e = 0; e < n; ++e) {
      local.push_back(engine.local_girth_value(e));
      girth = std::min(girth, local.back());
    }
  }

  // Coloops count as (vacuously) k-loose.
  ElementSet k_loose(int k) const {
    ElementSet out;
    for (Label e = 0; e < n; ++e)
      if (local[e].is_infinite() || local[e].value() > r - k) out.push_back(e);
    return out;
  }

  bool k_paving(int k) const { return girth.is_infinite() || girth.value() > r - k; }
};

namespace {

using Facts = BoundEvaluator::Facts;

constexpr std::array<TheoremId, 8> kTheorems = {TheoremId::T1_1, TheoremId::T1_2,
                                                TheoremId::C1_3, TheoremId::T1_4,
                                                TheoremId::C1_6, TheoremId::T3_1,
                                                TheoremId::C3_4, TheoremId::C3_5};

long long floor_div(long long a, long long b) {
  long long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::string set_to_string(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void add(BoundEvaluation& ev, std::string name, bool passed, std::string detail = {}) {
  ev.hypotheses.push_back({std::move(name), passed, std::move(detail)});
}

void add_simple(BoundEvaluation& ev, const Facts& f) { add(ev, "simple", f.simple); }

void add_no_coloops(BoundEvaluation& ev, const Facts& f) {
  add(ev, "no coloops", f.coloops.empty(),
      f.coloops.empty() ? "" : "coloops " + set_to_string(f.coloops));
}

void add_k_paving(BoundEvaluation& ev, const Facts& f, int k) {
  add(ev, std::to_string(k) + "-paving", f.k_paving(k),
      "girth " + f.girth.to_string() + ", needs > " + std::to_string(f.r - k));
}

void add_not_circuit(BoundEvaluation& ev, const Facts& f) {
  add(ev, "not a circuit", !f.circuit);
}

// Compares observed against bound once the hypotheses are settled.
void settle(BoundEvaluation& ev, const MatroidRep& m) {
  if (!ev.all_hypotheses_pass()) {
    ev.verdict = Verdict::hypothesis_not_met;
  } else if (ev.observed_value > ev.bound_value) {
    const bool escaped = std::any_of(ev.escapes.begin(), ev.escapes.end(),
                                     [](const HypothesisCheck& c) { return c.passed; });
    ev.verdict = escaped ? Verdict::holds : Verdict::violation;
  } else {
    ev.verdict = ev.observed_value == ev.bound_value ? Verdict::attained : Verdict::holds;
  }
  if (ev.verdict == Verdict::violation) ev.certificate = m;
}

void evaluate_one_loose_size(BoundEvaluation& ev, const Facts& f, int k) {
  add_simple(ev, f);
  add_no_coloops(ev, f);
  add(ev, "rank >= 5", f.r >= 5, "rank " + std::to_string(f.r));
  add(ev, "0 <= k <= (r-2)/3", k >= 0 && 3 * k <= f.r - 2);
  const auto loose = f.k_loose(k);
  add(ev, "k-loose element exists", !loose.empty(),
      loose.empty() ? "" : "first " + std::to_string(loose.front()));
  ev.quantity = Quantity::size;
  ev.bound_value = bound_size_one_loose(f.r, k);
  ev.observed_value = f.n;
}

void evaluate_two_loose_rank(BoundEvaluation& ev, const MatroidRep& m, const Facts& f, int k) {
  add_simple(ev, f);
  add_no_coloops(ev, f);
  const auto loose = f.k_loose(k);
  add(ev, "two k-loose elements", loose.size() >= 2,
      std::to_string(loose.size()) + " k-loose elements");
  if (k == 0) ev.notes.push_back("k = 0 is outside the stated range (k >= 1 implied)");
  ev.quantity = Quantity::rank;
  ev.bound_value = bound_rank_two_loose(f.q, k);
  ev.observed_value = f.r;

  if (ev.all_hypotheses_pass() && ev.observed_value > ev.bound_value) {
    // Every pair of k-loose elements must then be a cocircuit.
    std::string failed;
    for (std::size_t i = 0; i < loose.size() && failed.empty(); ++i)
      for (std::size_t j = i + 1; j < loose.size() && failed.empty(); ++j)
        if (!is_cocircuit_pair(m, loose[i], loose[j]))
          failed = "{" + std::to_string(loose[i]) + "," + std::to_string(loose[j]) + "}";
    ev.escapes.push_back({"cocircuit-pair escape", failed.empty(),
                          failed.empty() ? "every k-loose pair is a cocircuit"
                                         : "pair " + failed + " is not a cocircuit"});
  }
}

void evaluate_paving_rank(BoundEvaluation& ev, const Facts& f, int k, int bound) {
  add_simple(ev, f);
  add_no_coloops(ev, f);
  add_k_paving(ev, f, k);
  ev.quantity = Quantity::rank;
  ev.bound_value = bound;
  ev.observed_value = f.r;
  if (ev.all_hypotheses_pass() && f.r > bound)
    ev.escapes.push_back({"is-circuit escape", f.circuit, f.circuit ? "M is a circuit" : ""});
}

void evaluate_paving_size(BoundEvaluation& ev, const Facts& f, int k) {
  add_simple(ev, f);
  add_k_paving(ev, f, k);
  add_not_circuit(ev, f);
  add(ev, "r >= k+4", f.r >= k + 4, "rank " + std::to_string(f.r));
  add_no_coloops(ev, f);
  ev.notes.push_back("no coloops: needed by the rank bound r <= 3k+1 the size bound rests on");
  if (ev.all_hypotheses_pass() && f.r > 3 * k + 1) {
    ev.notes.push_back("rank conclusion r <= 3k+1 fails");
    ev.quantity = Quantity::rank;
    ev.bound_value = 3LL * k + 1;
    ev.observed_value = f.r;
    return;
  }
  ev.quantity = Quantity::size;
  ev.bound_value = bound_size_kpaving(f.r, k);
  ev.observed_value = f.n;
}

void evaluate_three_paving(BoundEvaluation& ev, const Facts& f) {
  add_simple(ev, f);
  add_k_paving(ev, f, 3);
  add(ev, "rank >= 7", f.r >= 7, "rank " + std::to_string(f.r));
  add_not_circuit(ev, f);
  add_no_coloops(ev, f);
  ev.notes.push_back("not a circuit, no coloops: inherited from the general size bound");
  if (ev.all_hypotheses_pass() && f.r > 10) {
    ev.notes.push_back("rank conclusion r <= 10 fails");
    ev.quantity = Quantity::rank;
    ev.bound_value = 10;
    ev.observed_value = f.r;
    return;
  }
  ev.quantity = Quantity::size;
  ev.bound_value = f.r >= 7 ? bound_size_kpaving(f.r, 3) : 13;
  ev.observed_value = f.n;
}

void evaluate_ternary_size(BoundEvaluation& ev, const Facts& f) {
  add_simple(ev, f);
  add_no_coloops(ev, f);
  add(ev, "rank >= 5", f.r >= 5, "rank " + std::to_string(f.r));
  const auto loose = f.k_loose(1);
  add(ev, "1-loose element exists", !loose.empty());
  ev.quantity = Quantity::size;
  ev.bound_value = bound_ternary_one_loose(f.r);
  ev.observed_value = f.n;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1.1";
    case TheoremId::T1_2: return "T1.2";
    case TheoremId::C1_3: return "C1.3";
    case TheoremId::T1_4: return "T1.4";
    case TheoremId::C1_6: return "C1.6";
    case TheoremId::T3_1: return "T3.1";
    case TheoremId::C3_4: return "C3.4";
    case TheoremId::C3_5: return "C3.5";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
  for (TheoremId id : kTheorems)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::attained: return "attained";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

std::string_view to_string(Quantity q) { return q == Quantity::size ? "size" : "rank"; }

bool BoundEvaluation::all_hypotheses_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisCheck& c) { return c.passed; });
}

long long bound_size_one_loose(int r, int k) {
  if (k < 0 || k > 60) throw std::invalid_argument("k out of range for 2^k (r-k+1)");
  return (1LL << k) * (static_cast<long long>(r) - k + 1);
}

int bound_rank_two_loose(int q, int k) {
  if (!FieldSpec::is_supported(q)) throw UnsupportedFieldError(q);
  return (q + 1) * (k - 1) + 2 * q;
}

int kpaving_sum_limit(int r, int k) {
  return static_cast<int>(floor_div(3LL * k + 1 - r, 2));
}

long long bound_size_kpaving(int r, int k) {
  const int t = kpaving_sum_limit(r, k);
  long long sum = 0;
  for (int i = 0; i <= t; ++i) sum += binomial(k, i);
  return static_cast<long long>(r) + 1 + sum;
}

long long bound_ternary_one_loose(int r) {
  if (r > 10) return floor_div(41LL * r - 101, 2);
  return floor_div(35LL * r - 35, 2);
}

Applicability one_loose_size_applicability(int r, int k) {
  if (r < 5) return {false, "needs r >= 5"};
  if (k < 0 || 3 * k > r - 2) return {false, "needs 0 <= k <= (r-2)/3"};
  return {true, {}};
}

Applicability kpaving_size_applicability(int r, int k) {
  if (r < k + 4) return {false, "needs r >= k+4"};
  if (r > 3 * k + 1) return {false, "needs r <= 3k+1 (t < 0)"};
  return {true, {}};
}

Applicability ternary_size_applicability(int r) {
  if (r < 5) return {false, "needs r >= 5"};
  return {true, {}};
}

bool theorem_takes_k(TheoremId theorem) {
  return theorem != TheoremId::C1_6 && theorem != TheoremId::T3_1;
}

std::optional<int> theorem_field(TheoremId theorem) {
  switch (theorem) {
    case TheoremId::T1_1:
    case TheoremId::T1_4:
    case TheoremId::C1_6:
    case TheoremId::C3_4: return 2;
    case TheoremId::T3_1:
    case TheoremId::C3_5: return 3;
    default: return std::nullopt;
  }
}

BoundEvaluator::BoundEvaluator(const MatroidRep& m)
    : m_(m), facts_(std::make_unique<const Facts>(m)) {}
BoundEvaluator::~BoundEvaluator() = default;
BoundEvaluator::BoundEvaluator(BoundEvaluator&&) noexcept = default;
BoundEvaluator& BoundEvaluator::operator=(BoundEvaluator&&) noexcept = default;

namespace {

void check_request(const MatroidRep& m, TheoremId theorem, std::optional<int>& k) {
  if (theorem_takes_k(theorem)) {
    if (!k) throw EvaluationError(std::string(to_string(theorem)) + " requires k");
    if (*k < 0) throw EvaluationError("k must be non-negative");
  } else {
    const int fixed = theorem == TheoremId::C1_6 ? 3 : 1;
    if (k && *k != fixed) {
      throw EvaluationError(std::string(to_string(theorem)) + " fixes k = " +
                            std::to_string(fixed));
    }
    k = fixed;
  }
  if (auto want = theorem_field(theorem); want && *want != m.field().order()) {
    throw EvaluationError(std::string(to_string(theorem)) + " requires GF(" +
                          std::to_string(*want) + "), matroid is over " + m.field().name());
  }
}

}  // namespace

BoundEvaluation BoundEvaluator::evaluate(TheoremId theorem, std::optional<int> k) const {
  check_request(m_, theorem, k);
  const Facts& facts = *facts_;
  const MatroidRep& m = m_;
  BoundEvaluation ev;
  ev.theorem = theorem;
  ev.r = facts.r;
  ev.k = k;
  ev.q = facts.q;

  switch (theorem) {
    case TheoremId::T1_1: evaluate_one_loose_size(ev, facts, *k); break;
    case TheoremId::T1_2: evaluate_two_loose_rank(ev, m, facts, *k); break;
    case TheoremId::C1_3:
    case TheoremId::C3_4:
    case TheoremId::C3_5:
      evaluate_paving_rank(ev, facts, *k, bound_rank_two_loose(facts.q, *k));
      break;
    case TheoremId::T1_4: evaluate_paving_size(ev, facts, *k); break;
    case TheoremId::C1_6: evaluate_three_paving(ev, facts); break;
    case TheoremId::T3_1: evaluate_ternary_size(ev, facts); break;
  }
  settle(ev, m);
  return ev;
}

BoundEvaluation evaluate(const MatroidRep& m, TheoremId theorem, std::optional<int> k) {
  check_request(m, theorem, k);
  return BoundEvaluator(m).evaluate(theorem, k);
}

}  // namespace kpave
