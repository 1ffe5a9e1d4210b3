#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace kpave {

/// A field element under the canonical encoding: the polynomial
/// a_0 + a_1 x + ... + a_{m-1} x^{m-1} over GF(p) is stored as
/// a_0 + a_1 p + ... + a_{m-1} p^{m-1}. 0 and 1 are the identities.
using Element = std::uint8_t;

class UnsupportedFieldError : public std::invalid_argument {
 public:
  explicit UnsupportedFieldError(int q);
};

/// Small finite field GF(q), q in {2,3,4,5,7,8,9}, with full addition and
/// multiplication tables. Immutable, cheap to copy, safe to share.
class FieldSpec {
 public:
  static constexpr int kMaxOrder = 9;

  /// Builds GF(q) with its canonical modulus (x^2+x+1 for GF(4),
  /// x^3+x+1 for GF(8), x^2+1 for GF(9)).
  static FieldSpec make(int q);

  static std::span<const int> supported_orders();
  static bool is_supported(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }
  /// Modulus coefficients encoded as sum a_i p^i; 0 for prime fields.
  int modulus() const { return modulus_; }
  bool is_binary() const { return q_ == 2; }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    return add_[a * kMaxOrder + b];
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const {
    check(a);
    return neg_[a];
  }
  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    return mul_[a * kMaxOrder + b];
  }
  /// Multiplicative inverse; throws std::domain_error for 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool contains(int value) const { return value >= 0 && value < q_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.q_ == b.q_;
  }

 private:
  FieldSpec() = default;

  void check(Element a) const {
    if (a >= q_) {
      throw std::out_of_range("field element " + std::to_string(a) +
                              " out of range for " + name());
    }
  }

  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  int modulus_ = 0;
  std::array<Element, kMaxOrder * kMaxOrder> add_{};
  std::array<Element, kMaxOrder * kMaxOrder> mul_{};
  std::array<Element, kMaxOrder> neg_{};
  std::array<Element, kMaxOrder> inv_{};
};

inline FieldSpec make_field(int q) { return FieldSpec::make(q); }

}  // namespace kpave
