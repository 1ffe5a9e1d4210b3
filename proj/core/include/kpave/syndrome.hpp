#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpave/field.hpp"

namespace kpave {

/// Raised when a request exceeds an explicit size cap (rank, state space,
/// enumeration budget). Never silently truncated.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// GF(q)^dim with vectors encoded as integers sum_i v_i q^i.
/// For q = 2 the encoding is a bitmask and addition is XOR.
class SyndromeSpace {
 public:
  static constexpr std::uint32_t kMaxStates = std::uint32_t{1} << 24;

  SyndromeSpace(FieldSpec field, int dim);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (binary_) return a ^ b;
    return add_generic(a, b);
  }
  std::uint32_t scale(Element s, std::uint32_t v) const;
  std::uint32_t neg(std::uint32_t v) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  /// All nonzero scalar multiples of v (just {v} over GF(2)).
  std::vector<std::uint32_t> multiples(std::uint32_t v) const;

  /// Rescales so the lowest-index nonzero coordinate is 1.
  std::uint32_t normalize(std::uint32_t v) const;
  bool is_normalized(std::uint32_t v) const { return v != 0 && normalize(v) == v; }

  Element coordinate(std::uint32_t v, int i) const {
    return static_cast<Element>((v / pow_[i]) % static_cast<std::uint32_t>(field_.order()));
  }
  int zero_count(std::uint32_t v) const;

 private:
  std::uint32_t add_generic(std::uint32_t a, std::uint32_t b) const;

  FieldSpec field_;
  int dim_;
  bool binary_;
  std::uint32_t size_ = 1;
  std::vector<std::uint32_t> pow_;
};

}  // namespace kpave
