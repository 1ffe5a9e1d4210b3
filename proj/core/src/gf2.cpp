#include "kpave/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace kpave::gf2 {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      words_((static_cast<std::size_t>(cols) + 63) / 64),
      data_(static_cast<std::size_t>(rows) * words_, 0) {}

void BitMatrix::set(int r, int c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  auto& w = data_[word_index(r, c)];
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::xor_row(int dst, int src) {
  auto* d = data_.data() + static_cast<std::size_t>(dst) * words_;
  const auto* s = data_.data() + static_cast<std::size_t>(src) * words_;
  for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

int BitMatrix::eliminate() {
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    swap_rows(rank, pivot);
    for (int r = rank + 1; r < rows_; ++r)
      if (get(r, c)) xor_row(r, rank);
    ++rank;
  }
  return rank;
}

int BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.eliminate();
}

std::uint64_t XorBasis::reduce(std::uint64_t v) const {
  while (v != 0) {
    const int top = 63 - std::countl_zero(v);
    if (pivot_[top] == 0) return v;
    v ^= pivot_[top];
  }
  return 0;
}

bool XorBasis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  pivot_[63 - std::countl_zero(v)] = v;
  ++size_;
  return true;
}

int rank_of(std::span<const std::uint64_t> vectors) {
  XorBasis basis;
  for (auto v : vectors) basis.insert(v);
  return basis.size();
}

}  // namespace kpave::gf2
