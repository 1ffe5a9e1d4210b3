#include "kpave/syndrome.hpp"

#include <string>

#include "kpave/gf2.hpp"

namespace kpave {

SyndromeSpace::SyndromeSpace(FieldSpec field, int dim)
    : field_(std::move(field)), dim_(dim), binary_(field_.is_binary()) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  const auto q = static_cast<std::uint64_t>(field_.order());
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    pow_.push_back(static_cast<std::uint32_t>(total));
    total *= q;
    if (total > kMaxStates) {
      throw CapacityError("state space " + field_.name() + "^" + std::to_string(dim) +
                          " exceeds the 2^24 state cap");
    }
  }
  size_ = static_cast<std::uint32_t>(total);
}

std::uint32_t SyndromeSpace::add_generic(std::uint32_t a, std::uint32_t b) const {
  const auto q = static_cast<std::uint32_t>(field_.order());
  std::uint32_t out = 0;
  for (int i = 0; i < dim_; ++i) {
    const auto x = static_cast<Element>(a % q);
    const auto y = static_cast<Element>(b % q);
    out += field_.add(x, y) * pow_[i];
    a /= q;
    b /= q;
  }
  return out;
}

std::uint32_t SyndromeSpace::scale(Element s, std::uint32_t v) const {
  if (s == 0) return 0;
  if (binary_) return v;
  const auto q = static_cast<std::uint32_t>(field_.order());
  std::uint32_t out = 0;
  for (int i = 0; i < dim_; ++i) {
    out += field_.mul(s, static_cast<Element>(v % q)) * pow_[i];
    v /= q;
  }
  return out;
}

std::uint32_t SyndromeSpace::neg(std::uint32_t v) const {
  if (binary_) return v;
  const auto q = static_cast<std::uint32_t>(field_.order());
  std::uint32_t out = 0;
  for (int i = 0; i < dim_; ++i) {
    out += field_.neg(static_cast<Element>(v % q)) * pow_[i];
    v /= q;
  }
  return out;
}

std::vector<std::uint32_t> SyndromeSpace::multiples(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (int s = 1; s < field_.order(); ++s) out.push_back(scale(static_cast<Element>(s), v));
  return out;
}

std::uint32_t SyndromeSpace::normalize(std::uint32_t v) const {
  if (v == 0 || binary_) return v;
  for (int i = 0; i < dim_; ++i) {
    const Element c = coordinate(v, i);
    if (c != 0) return scale(field_.inv(c), v);
  }
  return v;
}

int SyndromeSpace::zero_count(std::uint32_t v) const {
  if (binary_) return dim_ - gf2::weight(v);
  int zeros = 0;
  for (int i = 0; i < dim_; ++i) zeros += coordinate(v, i) == 0;
  return zeros;
}

}  // namespace kpave
