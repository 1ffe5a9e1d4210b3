#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kpave::gf2 {

/// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (data_[word_index(r, c)] >> (c & 63)) & 1U;
  }
  void set(int r, int c, bool value);

  /// row(dst) ^= row(src)
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);

  /// Rank by in-place elimination; the matrix is left in row echelon form.
  int eliminate();
  int rank() const;

 private:
  std::size_t word_index(int r, int c) const {
    return static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c >> 6);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Incremental XOR basis over vectors of at most 64 coordinates.
/// insert() returns false when the vector is already in the span.
class XorBasis {
 public:
  bool insert(std::uint64_t v);
  bool spans(std::uint64_t v) const { return reduce(v) == 0; }
  std::uint64_t reduce(std::uint64_t v) const;
  int size() const { return size_; }

 private:
  std::uint64_t pivot_[64] = {};
  int size_ = 0;
};

/// Rank of a family of vectors packed as masks (each at most 64 bits).
int rank_of(std::span<const std::uint64_t> vectors);

inline int weight(std::uint64_t v) { return __builtin_popcountll(v); }

}  // namespace kpave::gf2
