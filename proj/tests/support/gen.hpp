#pragma once

// Hand-rolled generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "kpave/matroid.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline kpave::MatroidRep matrix(Rng& rng, int q, int rows, int cols) {
  std::vector<kpave::Element> e(static_cast<std::size_t>(rows) * cols);
  for (auto& x : e) x = static_cast<kpave::Element>(uniform(rng, 0, q - 1));
  return kpave::MatroidRep(kpave::make_field(q), rows, cols, std::move(e));
}

inline std::uint64_t ipow(int b, int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= static_cast<std::uint64_t>(b);
  return v;
}

// Column of a code under base-q digits, row 0 least significant.
inline std::vector<int> digits(std::uint64_t code, int q, int r) {
  std::vector<int> d(r);
  for (int i = 0; i < r; ++i, code /= static_cast<std::uint64_t>(q)) d[i] = static_cast<int>(code % q);
  return d;
}

// Leading (lowest-index) nonzero digit equals 1.
inline bool is_projective_rep(std::uint64_t code, int q, int r) {
  for (int d : digits(code, q, r))
    if (d != 0) return d == 1;
  return false;
}

inline kpave::MatroidRep from_codes(int q, int r, const std::vector<std::uint64_t>& codes) {
  const int n = static_cast<int>(codes.size());
  std::vector<kpave::Element> e(static_cast<std::size_t>(r) * n);
  for (int j = 0; j < n; ++j) {
    const auto d = digits(codes[j], q, r);
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i) * n + j] = static_cast<kpave::Element>(d[i]);
  }
  return kpave::MatroidRep(kpave::make_field(q), r, n, std::move(e));
}

// min(n, #points) distinct projective points in GF(q)^r, in random order
// (simple, but possibly with coloops or rank < r).
inline kpave::MatroidRep simple_matroid(Rng& rng, int q, int r, int n) {
  const std::uint64_t total = ipow(q, r);
  n = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(n), (total - 1) / (q - 1)));
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> codes;
  while (static_cast<int>(codes.size()) < n) {
    const std::uint64_t c = 1 + rng() % (total - 1);
    if (!is_projective_rep(c, q, r) || !seen.insert(c).second) continue;
    codes.push_back(c);
  }
  return from_codes(q, r, codes);
}

}  // namespace gen
