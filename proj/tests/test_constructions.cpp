#include <doctest.h>

#include <set>

#include "kpave/bounds.hpp"
#include "kpave/constructions.hpp"
#include "kpave/loose.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace kpave;

namespace {

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Subsets the brute-force oracle would test before reaching size s.
long long oracle_cost(int n, int s) {
  long long total = 0;
  for (int i = 0; i < s; ++i) total += choose(n - 1, i);
  return total;
}

std::set<std::vector<int>> distinct_columns(const MatroidRep& m) {
  std::set<std::vector<int>> out;
  for (int j = 0; j < m.size(); ++j) {
    std::vector<int> col;
    for (int i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
    out.insert(col);
  }
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("extremal column layout for r=3, k=1") {
    const auto ext = extremal_k_loose(3, 1);
    const auto expect = MatroidRep::from_rows(make_field(2), {{1, 0, 0, 0, 1, 1},
                                                              {0, 1, 0, 1, 1, 0},
                                                              {0, 0, 1, 1, 0, 1}});
    CHECK(ext.matroid == expect);
    CHECK(ext.loose_element == 3);
  }

  TEST_CASE("extremal family: size, simplicity, coloops, local girth") {
    int oracle_checked = 0;
    for (int r = 2; r <= 10; ++r) {
      for (int k = 0; k <= r - 2; ++k) {
        CAPTURE(r);
        CAPTURE(k);
        const auto ext = extremal_k_loose(r, k);
        const auto& m = ext.matroid;
        CHECK(m.size() == (1LL << k) * (r - k + 1));
        CHECK(m.rank() == r);
        CHECK(is_simple(m));
        CHECK(coloops(m).empty());
        // Simple over GF(2): distinct nonzero columns.
        const auto cols = distinct_columns(m);
        CHECK(static_cast<int>(cols.size()) == m.size());
        CHECK(cols.count(std::vector<int>(r, 0)) == 0);

        const auto lr = looseness_index(m, ext.loose_element);
        CHECK(lr.local_girth == Girth::finite(r - k + 1));
        CHECK(lr.looseness_index == k);
        if (oracle_cost(m.size(), r - k + 1) <= 2'000'000) {
          ++oracle_checked;
          const auto mc = oracle::min_circuit_through(m, ext.loose_element);
          REQUIRE(mc.size);
          CHECK(*mc.size == r - k + 1);
          CHECK(mc.witness == lr.witness);
        }
      }
    }
    // All r <= 8 plus the cheap cases at r = 9, 10.
    CHECK(oracle_checked >= 34);
  }

  TEST_CASE("Reed-Muller generator matrix") {
    const auto rm2 = reed_muller_r1(2);
    CHECK(rm2 == MatroidRep::from_rows(make_field(2), {{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}}));
    for (int m = 2; m <= 6; ++m) {
      CAPTURE(m);
      const auto rm = reed_muller_r1(m);
      CHECK(rm.rows() == m + 1);
      CHECK(rm.size() == (1 << m));
      CHECK(rm.rank() == m + 1);
      const auto cols = distinct_columns(rm);
      CHECK(static_cast<int>(cols.size()) == rm.size());
      CHECK(cols.count(std::vector<int>(m + 1, 0)) == 0);
      CHECK(girth(rm) == Girth::finite(4));
      if (m <= 5) CHECK(oracle::girth(rm) == 4);
      if (m >= 3) {
        CHECK(paving_report(rm).paving_index == m - 2);
        CHECK((1LL << m) > bound_size_kpaving(m + 1, m - 2));
        CHECK_FALSE(kpaving_size_applicability(m + 1, m - 2).applicable);
      }
    }
  }

  TEST_CASE("circuit matroid") {
    const auto c = circuit_matroid(4);
    CHECK(c.size() == 5);
    CHECK(c.rank() == 4);
    CHECK(oracle::is_circuit(c, {0, 1, 2, 3, 4}));
    CHECK(circuit_matroid(1).size() == 2);
  }

  TEST_CASE("range errors") {
    CHECK_THROWS_AS(extremal_k_loose(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(extremal_k_loose(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(extremal_k_loose(5, -1), std::invalid_argument);
    CHECK_THROWS_AS(reed_muller_r1(1), std::invalid_argument);
    CHECK_THROWS_AS(circuit_matroid(0), std::invalid_argument);
  }
}
