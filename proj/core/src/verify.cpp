#include "kpave/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "kpave/bounds.hpp"
#include "kpave/constructions.hpp"
#include "kpave/loose.hpp"
#include "kpave/random_matroids.hpp"
#include "kpave/search.hpp"

namespace kpave {

namespace {

using random::below;
using random::Rng;

constexpr std::array<std::string_view, 5> kSuites = {"construction", "bounds", "oracle",
                                                     "paving-rank", "table-1-6"};

class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    out_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

 private:
  SuiteResult& out_;
};

std::string str(const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::string rk(int r, int k) { return "r=" + std::to_string(r) + " k=" + std::to_string(k); }

// Minimum size over the oracle's circuit list, and the lex-first circuit of
// that size.
struct OracleMin {
  Girth girth = Girth::infinite();
  ElementSet witness;
};

OracleMin oracle_min(const std::vector<ElementSet>& circuits) {
  OracleMin out;
  for (const auto& c : circuits) {
    const Girth g = Girth::finite(static_cast<int>(c.size()));
    if (g < out.girth) {
      out.girth = g;
      out.witness = c;
    }
  }
  return out;
}

// ---------------------------------------------------------------- table-1-6

void table_suite(Recorder& rec) {
  constexpr std::array<std::pair<int, long long>, 4> expected = {
      {{7, 12}, {8, 13}, {9, 11}, {10, 12}}};
  for (auto [r, want] : expected) {
    const long long got = bound_size_kpaving(r, 3);
    const bool applicable = kpaving_size_applicability(r, 3).applicable;
    rec.check("3-paving size bound r=" + std::to_string(r), got == want && applicable,
              "got " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

// ------------------------------------------------------------- construction

void construction_suite(Recorder& rec) {
  for (int r = 2; r <= 10; ++r) {
    for (int k = 0; k <= r - 2; ++k) {
      const auto ext = extremal_k_loose(r, k);
      const MatroidRep& m = ext.matroid;
      const Label e = ext.loose_element;
      const long long want = bound_size_one_loose(r, k);

      rec.check("size " + rk(r, k), m.size() == want && m.rank() == r,
                std::to_string(m.size()) + " columns, expected " + std::to_string(want));
      rec.check("simple " + rk(r, k), is_simple(m));
      const ElementSet cl = coloops(m);
      rec.check("coloop-free " + rk(r, k), cl.empty(), "coloops " + str(cl));

      const LooseReport lr = looseness_index(m, e);
      const bool girth_ok = lr.local_girth == Girth::finite(r - k + 1);
      rec.check("local girth " + rk(r, k), girth_ok && lr.looseness_index == k,
                "local girth " + lr.local_girth.to_string() + ", looseness " +
                    std::to_string(lr.looseness_index));

      if (r <= 8) {
        const auto circuits = circuits_through_oracle(m, e, r - k + 1);
        const OracleMin om = oracle_min(circuits);
        rec.check("oracle " + rk(r, k),
                  om.girth == lr.local_girth && om.witness == lr.witness,
                  "oracle girth " + om.girth.to_string() + " witness " + str(om.witness) +
                      ", search witness " + str(lr.witness));
      }

      const ZeroCountCheck z = loose_zero_count_check(m, e);
      rec.check("zero-count " + rk(r, k), z.applicable && z.violations == 0,
                std::to_string(z.checked) + " columns, " + std::to_string(z.violations) +
                    " violations" + (z.first_violation.empty() ? "" : ": " + z.first_violation));
    }
  }
}

// ------------------------------------------------------------------- oracle

void oracle_suite(Recorder& rec, Rng& rng) {
  constexpr int kCases = 200;
  int agree = 0;
  int elements = 0;
  std::string first_failure;
  for (int c = 0; c < kCases; ++c) {
    const int q = c % 2 == 0 ? 2 : 3;
    const int r = 1 + static_cast<int>(below(rng, 8));
    const int n = r + static_cast<int>(below(rng, static_cast<std::uint64_t>(17 - r)));
    const MatroidRep m = random::random_matrix(make_field(q), r, n, rng);
    const GirthEngine engine(m);
    bool ok = true;
    for (Label e = 0; e < m.size(); ++e) {
      ++elements;
      const LocalGirth lg = engine.local_girth(e);
      const int cap = std::min(m.rank() + 1, m.size());
      const OracleMin om = oracle_min(circuits_through_oracle(m, e, cap));
      if (lg.girth != om.girth || lg.witness != om.witness) {
        ok = false;
        if (first_failure.empty()) {
          first_failure = "case " + std::to_string(c) + " element " + std::to_string(e) +
                          ": search " + lg.girth.to_string() + " " + str(lg.witness) +
                          ", oracle " + om.girth.to_string() + " " + str(om.witness);
        }
      }
    }
    agree += ok;
  }
  rec.check("local girth matches oracle", agree == kCases,
            std::to_string(agree) + "/" + std::to_string(kCases) + " matroids, " +
                std::to_string(elements) + " elements" +
                (first_failure.empty() ? "" : "; " + first_failure));
}

// ------------------------------------------------------------------- bounds

// Random deletion of elements other than `keep` down to n, rejecting
// deletions that create coloops.
std::optional<MatroidRep> shrink(const MatroidRep& m, Label keep, int n, Rng& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Label> others;
    for (Label x = 0; x < m.size(); ++x)
      if (x != keep) others.push_back(x);
    for (std::size_t i = others.size(); i > 1; --i)
      std::swap(others[i - 1], others[below(rng, i)]);
    others.resize(static_cast<std::size_t>(m.size() - n));
    std::sort(others.begin(), others.end());
    const Deletion d = delete_elements(m, others);
    if (d.matroid.rank() == m.rank() && coloops(d.matroid).empty()) return d.matroid;
  }
  return std::nullopt;
}

int max_looseness(const MatroidRep& m) {
  const PavingReport pr = paving_report(m);
  int best = 0;
  for (const auto& e : pr.per_element)
    if (!e.coloop) best = std::max(best, e.looseness_index);
  return best;
}

void sharpness_checks(Recorder& rec) {
  for (int r = 5; r <= 8; ++r) {
    for (int k = 0; 3 * k <= r - 2; ++k) {
      const auto ext = extremal_k_loose(r, k);
      const BoundEvaluation ev = evaluate(ext.matroid, TheoremId::T1_1, k);
      rec.check("one-loose size bound attained " + rk(r, k), ev.verdict == Verdict::attained,
                std::string(to_string(ev.verdict)) + ", " + std::to_string(ev.observed_value) +
                    " vs " + std::to_string(ev.bound_value));
    }
  }
}

void one_loose_random_checks(Recorder& rec, Rng& rng) {
  constexpr int kCases = 1000;
  const FieldSpec gf2 = make_field(2);
  int generated = 0;
  int applicable = 0;
  int attained = 0;
  int violations = 0;
  int every_k_evaluations = 0;
  std::string first_violation;
  while (generated < kCases) {
    const int r = 5 + static_cast<int>(below(rng, 4));
    std::optional<MatroidRep> m;
    if (generated % 2 == 0) {
      const int hi = std::min(24, (1 << r) - 1);
      const int n = r + 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - r)));
      m = random::random_simple_coloop_free(gf2, r, n, rng);
    } else {
      const int k = static_cast<int>(below(rng, static_cast<std::uint64_t>((r - 2) / 3 + 1)));
      const auto ext = extremal_k_loose(r, k);
      const int hi = std::min(24, ext.matroid.size());
      const int n = r + 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - r)));
      auto small = shrink(ext.matroid, ext.loose_element, n, rng);
      if (!small) continue;
      m = random::scramble(*small, rng);
    }
    ++generated;

    const BoundEvaluator evaluator(*m);
    const int kmax = max_looseness(*m);
    const BoundEvaluation ev = evaluator.evaluate(TheoremId::T1_1, kmax);
    applicable += ev.all_hypotheses_pass();
    attained += ev.verdict == Verdict::attained;
    if (ev.verdict == Verdict::violation) {
      ++violations;
      if (first_violation.empty()) first_violation = "rank " + std::to_string(r) + " k " +
                                                     std::to_string(kmax);
    }
    for (int k = 0; 3 * k <= r - 2; ++k) {
      ++every_k_evaluations;
      if (evaluator.evaluate(TheoremId::T1_1, k).verdict == Verdict::violation) {
        ++violations;
        if (first_violation.empty())
          first_violation = "rank " + std::to_string(r) + " k " + std::to_string(k);
      }
    }
  }
  rec.check("one-loose size bound on random matroids", violations == 0 && generated >= kCases,
            std::to_string(generated) + " matroids (" + std::to_string(applicable) +
                " meet hypotheses at max looseness, " + std::to_string(attained) +
                " attain), " + std::to_string(every_k_evaluations) +
                " extra evaluations, " + std::to_string(violations) + " violations" +
                (first_violation.empty() ? "" : "; first " + first_violation));
}

// A matroid N of rank r with x = the all-ones column k-loose: start from
// [I_r | 1] and add random points that keep x k-loose.
MatroidRep grow_with_loose_column(const FieldSpec& field, int r, int k, int extra, Rng& rng) {
  const SyndromeSpace space(field, r);
  std::vector<std::uint32_t> codes;
  std::uint32_t ones = 0;
  for (int i = 0; i < r; ++i) {
    std::uint32_t u = 1;
    for (int j = 0; j < i; ++j) u *= static_cast<std::uint32_t>(field.order());
    codes.push_back(u);
    ones += u;
  }
  codes.push_back(ones);
  const Label x = r;
  std::set<std::uint32_t> used(codes.begin(), codes.end());
  for (int attempt = 0; attempt < 8 * extra && static_cast<int>(codes.size()) < r + 1 + extra;
       ++attempt) {
    const auto v = space.normalize(static_cast<std::uint32_t>(1 + below(rng, space.size() - 1)));
    if (used.count(v)) continue;
    codes.push_back(v);
    const MatroidRep trial = matroid_from_codes(field, r, codes);
    if (GirthEngine(trial).local_girth_exceeds(x, r - k)) {
      used.insert(v);
    } else {
      codes.pop_back();
    }
  }
  return matroid_from_codes(field, r, codes);
}

void two_loose_checks(Recorder& rec, Rng& rng) {
  constexpr int kCases = 500;
  struct Family {
    int q;
    int k;
  };
  constexpr std::array<Family, 3> families = {{{2, 1}, {3, 1}, {2, 2}}};
  int accepted = 0;
  int rejected = 0;
  int pairs = 0;
  int failures = 0;
  int violations = 0;
  std::string first_failure;
  for (int c = 0; accepted < kCases; ++c) {
    const Family fam = families[static_cast<std::size_t>(c) % families.size()];
    const FieldSpec field = make_field(fam.q);
    const int bound = bound_rank_two_loose(fam.q, fam.k);
    const int r = bound + 1 + static_cast<int>(below(rng, 2));
    const int extra = 1 + static_cast<int>(below(rng, 6));
    const MatroidRep base = grow_with_loose_column(field, r - 1, fam.k, extra, rng);
    const auto ext = random::series_extend(base, base.rows());
    const MatroidRep m = random::scramble(ext.matroid, rng);

    // Rejection sampling on the theorem's hypotheses.
    if (m.rank() <= bound || !is_simple(m) || !coloops(m).empty()) {
      ++rejected;
      continue;
    }
    const GirthEngine engine(m);
    ElementSet loose;
    for (Label e = 0; e < m.size(); ++e)
      if (engine.local_girth_exceeds(e, m.rank() - fam.k)) loose.push_back(e);
    if (loose.size() < 2) {
      ++rejected;
      continue;
    }
    ++accepted;
    for (std::size_t i = 0; i < loose.size(); ++i) {
      for (std::size_t j = i + 1; j < loose.size(); ++j) {
        ++pairs;
        if (!is_cocircuit_pair(m, loose[i], loose[j])) {
          ++failures;
          if (first_failure.empty())
            first_failure = "q=" + std::to_string(fam.q) + " " + rk(m.rank(), fam.k) +
                            " pair " + std::to_string(loose[i]) + "," + std::to_string(loose[j]);
        }
      }
    }
    if (evaluate(m, TheoremId::T1_2, fam.k).verdict == Verdict::violation) ++violations;
  }
  rec.check("two loose elements form a cocircuit above the rank bound",
            accepted >= kCases && failures == 0 && violations == 0,
            std::to_string(accepted) + " matroids, " + std::to_string(rejected) + " rejected, " +
                std::to_string(pairs) + " pairs, " + std::to_string(failures) +
                " non-cocircuit pairs, " + std::to_string(violations) + " violations" +
                (first_failure.empty() ? "" : "; first " + first_failure));
}

// Every theorem at every k on a mixed corpus.
void corpus_checks(Recorder& rec, Rng& rng) {
  std::vector<MatroidRep> corpus;
  for (int m = 3; m <= 6; ++m) corpus.push_back(reed_muller_r1(m));
  for (int r = 2; r <= 12; ++r) corpus.push_back(circuit_matroid(r));
  for (int r = 4; r <= 9; ++r)
    for (int k = 0; k <= std::min(r - 2, 3); ++k) corpus.push_back(extremal_k_loose(r, k).matroid);
  for (int i = 0; i < 120; ++i) {
    const int q = i % 3 == 2 ? 3 : 2;
    const FieldSpec field = make_field(q);
    const int r = 3 + static_cast<int>(below(rng, q == 2 ? 6 : 4));
    const SyndromeSpace space(field, r);
    const int points = static_cast<int>((space.size() - 1) / static_cast<std::uint64_t>(q - 1));
    const int hi = std::min(points, r + 10);
    const int n = r + 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - r)));
    corpus.push_back(random::random_simple_coloop_free(field, r, n, rng));
  }

  int evaluations = 0;
  int violations = 0;
  std::string first;
  for (const auto& m : corpus) {
    const BoundEvaluator evaluator(m);
    for (TheoremId id : all_theorems()) {
      if (auto f = theorem_field(id); f && *f != m.field().order()) continue;
      std::vector<std::optional<int>> ks;
      if (theorem_takes_k(id)) {
        for (int k = 0; k <= m.rank(); ++k) ks.push_back(k);
      } else {
        ks.push_back(std::nullopt);
      }
      for (auto k : ks) {
        ++evaluations;
        if (evaluator.evaluate(id, k).verdict == Verdict::violation) {
          ++violations;
          if (first.empty())
            first = std::string(to_string(id)) + " on rank " + std::to_string(m.rank()) +
                    " size " + std::to_string(m.size());
        }
      }
    }
  }
  rec.check("no violation across all bounds on a mixed corpus", violations == 0,
            std::to_string(corpus.size()) + " matroids, " + std::to_string(evaluations) +
                " evaluations, " + std::to_string(violations) + " violations" +
                (first.empty() ? "" : "; first " + first));
}

void bounds_suite(Recorder& rec, Rng& rng) {
  sharpness_checks(rec);
  one_loose_random_checks(rec, rng);
  two_loose_checks(rec, rng);
  corpus_checks(rec, rng);
}

// -------------------------------------------------------------- paving-rank

std::string zero_detail(const ZeroCountCheck& z) {
  return "k=" + std::to_string(z.k) + ", " + std::to_string(z.checked) + " sums, " +
         std::to_string(z.violations) + " violations" +
         (z.first_violation.empty() ? "" : ": " + z.first_violation);
}

void paving_rank_suite(Recorder& rec) {
  for (int m = 3; m <= 6; ++m) {
    const MatroidRep rm = reed_muller_r1(m);
    const PavingReport pr = paving_report(rm);
    const std::string tag = "Reed-Muller m=" + std::to_string(m);
    rec.check(tag + " girth", pr.girth == Girth::finite(4), "girth " + pr.girth.to_string());
    rec.check(tag + " paving index", pr.paving_index == m - 2 && is_k_paving(rm, m - 2),
              "paving index " + std::to_string(pr.paving_index));
    rec.check(tag + " rank", rm.rank() == m + 1 && rm.rank() <= 3 * (m - 2) + 1,
              "rank " + std::to_string(rm.rank()) + " vs " + std::to_string(3 * (m - 2) + 1));
    const BoundEvaluation ev = evaluate(rm, TheoremId::T1_4, m - 2);
    rec.check(tag + " paving size bound outside range", ev.verdict == Verdict::hypothesis_not_met,
              std::string(to_string(ev.verdict)));
    const ZeroCountCheck z = paving_zero_count_check(rm);
    rec.check(tag + " zero-count", z.applicable && z.violations == 0, zero_detail(z));
  }

  for (auto [r, k] : std::array<std::pair<int, int>, 2>{{{5, 1}, {8, 2}}}) {
    SearchConfig cfg;
    cfg.r = r;
    cfg.k = k;
    cfg.mode = SearchMode::nonexistence;
    const SearchResult res = run_search(cfg);
    const bool confirmed = res.status == NonexistenceStatus::confirmed && res.exhausted;
    rec.check("nonexistence " + rk(r, k), confirmed,
              std::string(res.status ? to_string(*res.status) : "none") +
                  ", exhausted=" + (res.exhausted ? "true" : "false") + ", " +
                  std::to_string(res.nodes_visited) + " nodes");
  }
  {
    SearchConfig cfg;
    cfg.r = 4;
    cfg.k = 1;
    cfg.mode = SearchMode::nonexistence;
    const SearchResult res = run_search(cfg);
    rec.check("counterexample " + rk(4, 1),
              res.status == NonexistenceStatus::counterexample && res.certificate.has_value(),
              std::string(res.status ? to_string(*res.status) : "none"));
  }
  for (auto [r, k, want] : std::array<std::array<int, 3>, 2>{{{4, 1, 8}, {5, 1, 6}}}) {
    SearchConfig cfg;
    cfg.r = r;
    cfg.k = k;
    const SearchResult res = run_search(cfg);
    rec.check("max size " + rk(r, k), res.best_size == want && res.exhausted,
              "best " + std::to_string(res.best_size) + ", expected " + std::to_string(want));
  }

  for (auto [r, k] : std::array<std::pair<int, int>, 4>{{{4, 1}, {5, 2}, {6, 2}, {7, 3}}}) {
    SearchConfig cfg;
    cfg.r = r;
    cfg.k = k;
    cfg.mode = SearchMode::enumerate;
    cfg.size_target = r + 2;
    const SearchResult res = run_search(cfg);
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string first;
    for (const auto& cert : res.certificates) {
      auto tally = [&](const ZeroCountCheck& z) {
        checked += z.checked;
        violations += z.violations;
        if (first.empty() && !z.first_violation.empty()) first = z.first_violation;
      };
      tally(paving_zero_count_check(cert));
      for (Label e = 0; e < cert.size(); ++e) tally(loose_zero_count_check(cert, e));
    }
    rec.check("zero-count on search certificates " + rk(r, k),
              !res.certificates.empty() && violations == 0,
              std::to_string(res.certificates.size()) + " certificates, " +
                  std::to_string(checked) + " sums, " + std::to_string(violations) +
                  " violations" + (first.empty() ? "" : ": " + first));
  }
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CriterionCheck& c) { return c.passed; });
}

Json SuiteResult::to_json() const {
  Json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["passed"] = passed();
  Json list = Json::array();
  for (const auto& c : checks)
    list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(list);
  return out;
}

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  SuiteResult result;
  result.suite = std::string(name);
  result.seed = seed;
  Recorder rec(result);
  Rng rng(seed);
  if (name == "table-1-6") {
    table_suite(rec);
  } else if (name == "construction") {
    construction_suite(rec);
  } else if (name == "oracle") {
    oracle_suite(rec, rng);
  } else if (name == "bounds") {
    bounds_suite(rec, rng);
  } else if (name == "paving-rank") {
    paving_rank_suite(rec);
  } else {
    throw UnknownSuiteError("unknown suite: " + std::string(name));
  }
  return result;
}

}  // namespace kpave
