#include <doctest.h>

#include "kpave/loose.hpp"
#include "kpave/search.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace kpave;

namespace {

SearchConfig config(int q, int r, int k, SearchMode mode = SearchMode::max_size) {
  SearchConfig c;
  c.q = q;
  c.r = r;
  c.k = k;
  c.mode = mode;
  return c;
}

std::vector<std::uint64_t> projective_points(int q, int r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1; c < gen::ipow(q, r); ++c)
    if (gen::is_projective_rep(c, q, r)) out.push_back(c);
  return out;
}

// Column set qualifies: rank r, no coloops, every circuit larger than r - k.
bool qualifies(const MatroidRep& m, int r, int k) {
  if (oracle::brute_rank(m) != r) return false;
  for (int e = 0; e < m.size(); ++e)
    if (oracle::is_coloop(m, e)) return false;
  const auto g = oracle::girth(m);
  return !g || *g > r - k;
}

struct BruteForce {
  int best = 0;            // largest qualifying set
  int best_non_circuit = 0;
  int containing_identity_at_least = 0;  // qualifying supersets of the unit vectors
};

BruteForce brute_force(int q, int r, int k, int target) {
  const auto points = projective_points(q, r);
  const int n = static_cast<int>(points.size());
  std::vector<bool> is_unit(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) is_unit[i] = is_unit[i] || points[i] == gen::ipow(q, j);
  BruteForce out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::uint64_t> codes;
    bool has_identity = true;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        codes.push_back(points[i]);
      } else if (is_unit[i]) {
        has_identity = false;
      }
    }
    const int size = static_cast<int>(codes.size());
    if (size < r) continue;
    const auto m = gen::from_codes(q, r, codes);
    if (!qualifies(m, r, k)) continue;
    out.best = std::max(out.best, size);
    if (size != r + 1) out.best_non_circuit = std::max(out.best_non_circuit, size);
    if (has_identity && size >= target) ++out.containing_identity_at_least;
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(6, 4, 1).validate(), UnsupportedFieldError);
    CHECK_THROWS_AS(config(2, 0, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(2, 4, -1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(2, 21, 1).validate(), CapacityError);
    CHECK_THROWS_AS(config(3, 13, 1).validate(), CapacityError);
    auto c = config(2, 4, 1);
    c.workers = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = config(2, 4, 1);
    c.node_budget = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK(parse_search_mode("nonexistence") == SearchMode::nonexistence);
    CHECK_FALSE(parse_search_mode("fastest"));
  }

  TEST_CASE("matroid_from_codes") {
    const std::vector<std::uint32_t> codes = {1, 2, 3};
    const auto m = matroid_from_codes(make_field(2), 2, codes);
    CHECK(m == MatroidRep::from_rows(make_field(2), {{1, 0, 1}, {0, 1, 1}}));
    CHECK(column_codes(m) == codes);
  }

  TEST_CASE("property: incremental feasibility matches brute-force local girth") {
    gen::Rng rng(77);
    int pairs = 0;
    while (pairs < 500) {
      const int q = pairs % 2 ? 3 : 2;
      const int r = gen::uniform(rng, 2, q == 2 ? 6 : 4);
      const int k = gen::uniform(rng, 0, r - 1);
      FeasibilityState state(make_field(q), r, k);
      const auto size = static_cast<std::uint32_t>(gen::ipow(q, r));
      const int target = gen::uniform(rng, 1, r + 4);
      for (int tries = 0; tries < 40 && static_cast<int>(state.columns().size()) < target; ++tries) {
        const auto v = static_cast<std::uint32_t>(1 + rng() % (size - 1));
        if (state.feasible(v)) state.push(v);
      }
      const auto v = static_cast<std::uint32_t>(rng() % size);
      std::vector<std::uint64_t> codes(state.columns().begin(), state.columns().end());
      codes.push_back(v);
      const auto m = gen::from_codes(q, r, codes);
      const auto mc = oracle::min_circuit_through(m, static_cast<int>(codes.size()) - 1);
      const bool expected = !mc.size || *mc.size > r - k;
      CAPTURE(q);
      CAPTURE(r);
      CAPTURE(k);
      CHECK(incremental_feasible(state, v) == expected);

      // push/pop restores the previous table.
      const auto probe = static_cast<std::uint32_t>(rng() % size);
      const bool before = state.feasible(probe);
      state.push(v);
      state.pop();
      CHECK(state.feasible(probe) == before);
      ++pairs;
    }
  }

  TEST_CASE("property: lex-pruned search matches exhaustive subset search") {
    struct Case {
      int q, r;
    };
    for (Case c : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{3, 3}}) {
      for (int k = 0; k < c.r; ++k) {
        CAPTURE(c.q);
        CAPTURE(c.r);
        CAPTURE(k);
        const auto bf = brute_force(c.q, c.r, k, c.r + 1);
        const auto res = max_kpaving_size(config(c.q, c.r, k));
        CHECK(res.exhausted);
        CHECK(res.best_size == bf.best);

        auto no_circuit = config(c.q, c.r, k);
        no_circuit.exclude_circuit = true;
        CHECK(max_kpaving_size(no_circuit).best_size == bf.best_non_circuit);

        auto unseeded = config(c.q, c.r, k);
        unseeded.seed = SeedColumns::none;
        CHECK(max_kpaving_size(unseeded).best_size == bf.best);

        auto en = config(c.q, c.r, k, SearchMode::enumerate);
        en.max_certificates = 1'000'000;
        const auto all = enumerate_kpaving(en);
        CHECK(static_cast<int>(all.certificates.size()) == bf.containing_identity_at_least);

        const auto ne = nonexistence(config(c.q, c.r, k, SearchMode::nonexistence));
        REQUIRE(ne.status);
        CHECK((*ne.status == NonexistenceStatus::confirmed) == (bf.best_non_circuit < c.r + 2));
      }
    }
  }

  TEST_CASE("certificates satisfy the requested properties") {
    for (auto [r, k] : {std::pair{4, 1}, std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 3}}) {
      const auto res = max_kpaving_size(config(2, r, k));
      REQUIRE(res.certificate);
      const auto& m = *res.certificate;
      CHECK(m.size() == res.best_size);
      CHECK(is_simple(m));
      CHECK(qualifies(m, r, k));
    }
  }

  TEST_CASE("binary nonexistence facts") {
    auto five = nonexistence(config(2, 5, 1, SearchMode::nonexistence));
    CHECK(five.status == NonexistenceStatus::confirmed);
    CHECK(five.exhausted);
    CHECK_FALSE(five.certificate);

    auto eight = nonexistence(config(2, 8, 2, SearchMode::nonexistence));
    CHECK(eight.status == NonexistenceStatus::confirmed);
    CHECK(eight.exhausted);

    auto four = nonexistence(config(2, 4, 1, SearchMode::nonexistence));
    CHECK(four.status == NonexistenceStatus::counterexample);
    REQUIRE(four.certificate);
    CHECK(four.certificate->size() >= 6);
    CHECK_FALSE(is_circuit_matroid(*four.certificate));
  }

  TEST_CASE("known maxima") {
    CHECK(max_kpaving_size(config(2, 4, 1)).best_size == 8);
    CHECK(max_kpaving_size(config(2, 5, 1)).best_size == 6);
    CHECK(max_kpaving_size(config(2, 7, 3)).best_size == 11);
  }

  TEST_CASE("budget cut yields no certified claim") {
    auto c = config(2, 8, 3);
    c.node_budget = 50;
    const auto res = max_kpaving_size(c);
    CHECK_FALSE(res.exhausted);
    CHECK(res.nodes_visited <= 50 + 1);

    auto ne = config(2, 7, 3, SearchMode::nonexistence);
    ne.size_target = 12;
    ne.node_budget = 20;
    const auto out = nonexistence(ne);
    CHECK_FALSE(out.exhausted);
    CHECK(out.status == NonexistenceStatus::inconclusive);
  }

  TEST_CASE("worker count does not change results") {
    for (auto [q, r, k] : {std::array{2, 6, 2}, std::array{2, 7, 3}, std::array{3, 3, 1},
                           std::array{2, 8, 3}}) {
      for (SearchMode mode : {SearchMode::max_size, SearchMode::enumerate,
                              SearchMode::nonexistence}) {
        auto one = config(q, r, k, mode);
        auto four = one;
        four.workers = 4;
        const auto a = run_search(one);
        const auto b = run_search(four);
        CAPTURE(r);
        CAPTURE(k);
        CHECK(a.best_size == b.best_size);
        CHECK(a.exhausted == b.exhausted);
        CHECK(a.certificate == b.certificate);
        CHECK(a.certificates == b.certificates);
        CHECK(a.status == b.status);
      }
    }
  }
}
