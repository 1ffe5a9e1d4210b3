#pragma once

// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library's arithmetic or elimination code.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kpave/matroid.hpp"

namespace oracle {

// GF(p^m) by schoolbook polynomial arithmetic on base-p digit vectors.
class PolyField {
 public:
  explicit PolyField(int q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: p_ = q; m_ = 1; break;
      case 4: p_ = 2; m_ = 2; modulus_ = {1, 1, 1}; break;     // x^2 + x + 1
      case 8: p_ = 2; m_ = 3; modulus_ = {1, 1, 0, 1}; break;  // x^3 + x + 1
      case 9: p_ = 3; m_ = 2; modulus_ = {1, 0, 1}; break;     // x^2 + 1
      default: throw std::invalid_argument("unsupported order");
    }
  }

  int order() const { return q_; }

  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  int neg(int a) const {
    auto x = digits(a);
    for (auto& d : x) d = (p_ - d) % p_;
    return encode(x);
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce by the monic modulus from the top degree down.
    for (int d = static_cast<int>(prod.size()) - 1; d >= m_; --d) {
      const int c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= m_; ++i)
        prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(m_);
    return encode(prod);
  }

  int inv(int a) const {
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> out(m_);
    for (int i = 0; i < m_; ++i, a /= p_) out[i] = a % p_;
    return out;
  }
  int encode(const std::vector<int>& d) const {
    int v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  }

  int q_;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
};

// Rank of the chosen columns by plain Gaussian elimination.
inline int brute_rank(const kpave::MatroidRep& m, const std::vector<int>& cols) {
  const PolyField f(m.field().order());
  const int rows = m.rows();
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols.size()));
  for (int i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = m.at(i, cols[j]);
  int r = 0;
  for (std::size_t c = 0; c < cols.size() && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const int iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const int factor = a[i][c];
      for (std::size_t j = 0; j < cols.size(); ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

inline int brute_rank(const kpave::MatroidRep& m) {
  std::vector<int> all(m.size());
  for (int i = 0; i < m.size(); ++i) all[i] = i;
  return brute_rank(m, all);
}

// S is a circuit iff S is dependent and S - x is independent for some
// (equivalently every) x; checking all x keeps the definition literal.
inline bool is_circuit(const kpave::MatroidRep& m, const std::vector<int>& s) {
  if (s.empty() || brute_rank(m, s) != static_cast<int>(s.size()) - 1) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<int> t = s;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
    if (brute_rank(m, t) != static_cast<int>(t.size())) return false;
  }
  return true;
}

// Calls fn on every k-subset of [0, n) in lexicographic order; stops when
// fn returns true.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct MinCircuit {
  std::optional<int> size;  // nullopt: no circuit through e (coloop)
  std::vector<int> witness;
};

// Smallest circuit through e, lexicographically first among equals.
inline MinCircuit min_circuit_through(const kpave::MatroidRep& m, int e, int cap = -1) {
  if (cap < 0) cap = m.size();
  std::vector<int> others;
  for (int x = 0; x < m.size(); ++x)
    if (x != e) others.push_back(x);
  const int n = static_cast<int>(others.size());
  for (int s = 0; s + 1 <= cap && s <= n; ++s) {
    MinCircuit out;
    for_each_subset(n, s, [&](const std::vector<int>& idx) {
      std::vector<int> rest;
      for (int i : idx) rest.push_back(others[i]);
      if (brute_rank(m, rest) != s) return false;
      std::vector<int> with = rest;
      with.push_back(e);
      if (brute_rank(m, with) != s) return false;
      std::sort(with.begin(), with.end());
      out.size = s + 1;
      out.witness = with;
      return true;
    });
    if (out.size) return out;
  }
  return {};
}

// Smallest circuit size anywhere in M; nullopt when M is free.
inline std::optional<int> girth(const kpave::MatroidRep& m) {
  for (int s = 1; s <= m.size(); ++s) {
    const bool found = for_each_subset(m.size(), s, [&](const std::vector<int>& idx) {
      return brute_rank(m, idx) < s;
    });
    if (found) return s;
  }
  return std::nullopt;
}

// e is a coloop iff deleting it drops the rank.
inline bool is_coloop(const kpave::MatroidRep& m, int e) {
  std::vector<int> rest;
  for (int x = 0; x < m.size(); ++x)
    if (x != e) rest.push_back(x);
  return brute_rank(m, rest) < brute_rank(m);
}

// All circuits of size at most cap, as sorted label lists.
inline std::vector<std::vector<int>> circuits_up_to(const kpave::MatroidRep& m, int cap) {
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= std::min(cap, m.size()); ++s) {
    for_each_subset(m.size(), s, [&](const std::vector<int>& idx) {
      if (is_circuit(m, idx)) out.push_back(idx);
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
