#include "kpave/constructions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kpave {

namespace {

MatroidRep from_columns(int rows, const std::vector<std::vector<Element>>& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<Element> entries(static_cast<std::size_t>(rows) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rows; ++i) entries[static_cast<std::size_t>(i) * n + j] = cols[j][i];
  return MatroidRep(FieldSpec::make(2), rows, n, std::move(entries));
}

std::vector<std::vector<Element>> identity_columns(int r) {
  std::vector<std::vector<Element>> cols(r, std::vector<Element>(r, 0));
  for (int i = 0; i < r; ++i) cols[i][i] = 1;
  return cols;
}

}  // namespace

ExtremalConstruction extremal_k_loose(int r, int k) {
  if (r < 2 || k < 0 || k > r - 2) {
    throw std::invalid_argument("extremal construction needs r >= 2 and 0 <= k <= r - 2 (got r=" +
                                std::to_string(r) + ", k=" + std::to_string(k) + ")");
  }
  if (k > 20) throw std::invalid_argument("k too large for an explicit construction");
  auto cols = identity_columns(r);
  const Label loose = r;

  std::vector<Element> e(r, 0);
  for (int i = k; i < r; ++i) e[i] = 1;
  cols.push_back(e);

  const int root = r - k;
  for (unsigned pattern = 1; pattern < (1U << k); ++pattern) {
    std::vector<Element> top(r, 0);
    for (int i = 0; i < k; ++i) top[i] = (pattern >> i) & 1U;
    for (int j = 0; j < root; ++j) {
      auto col = top;
      col[k + j] = 1;
      cols.push_back(std::move(col));
    }
    if (std::popcount(pattern) >= 2) cols.push_back(top);
  }
  return {from_columns(r, cols), loose};
}

MatroidRep reed_muller_r1(int m) {
  if (m < 2) throw std::invalid_argument("Reed-Muller R(1,m) needs m >= 2");
  if (m > 20) throw std::invalid_argument("Reed-Muller R(1,m) limited to m <= 20");
  const int n = 1 << m;
  std::vector<std::vector<Element>> cols;
  cols.reserve(n);
  for (int x = 0; x < n; ++x) {
    std::vector<Element> col(m + 1, 0);
    col[0] = 1;
    for (int i = 1; i <= m; ++i) col[i] = (x >> (m - i)) & 1;
    cols.push_back(std::move(col));
  }
  return from_columns(m + 1, cols);
}

MatroidRep circuit_matroid(int r) {
  if (r < 1) throw std::invalid_argument("circuit matroid needs r >= 1");
  auto cols = identity_columns(r);
  cols.emplace_back(r, Element{1});
  return from_columns(r, cols);
}

}  // namespace kpave
