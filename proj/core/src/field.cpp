#include "kpave/field.hpp"

#include <algorithm>
#include <vector>

namespace kpave {

namespace {

constexpr std::array<int, 7> kSupported = {2, 3, 4, 5, 7, 8, 9};

struct FieldShape {
  int p;
  int m;
  int modulus;  // encoded sum a_i p^i of the monic modulus, 0 when m == 1
};

FieldShape shape_of(int q) {
  switch (q) {
    case 2: return {2, 1, 0};
    case 3: return {3, 1, 0};
    case 5: return {5, 1, 0};
    case 7: return {7, 1, 0};
    case 4: return {2, 2, 1 + 1 * 2 + 1 * 4};          // x^2 + x + 1
    case 8: return {2, 3, 1 + 1 * 2 + 0 * 4 + 1 * 8};  // x^3 + x + 1
    case 9: return {3, 2, 1 + 0 * 3 + 1 * 9};          // x^2 + 1
    default: throw UnsupportedFieldError(q);
  }
}

std::vector<int> digits(int value, int p, int count) {
  std::vector<int> out(count, 0);
  for (int i = 0; i < count; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
  return value;
}

// Product of two polynomials of degree < m reduced by the monic modulus.
int poly_mul_mod(int a, int b, const FieldShape& f) {
  auto x = digits(a, f.p, f.m);
  auto y = digits(b, f.p, f.m);
  std::vector<int> prod(2 * f.m - 1, 0);
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % f.p;
  auto mod = digits(f.modulus, f.p, f.m + 1);
  for (int deg = 2 * f.m - 2; deg >= f.m; --deg) {
    int c = prod[deg];
    if (c == 0) continue;
    for (int i = 0; i <= f.m; ++i) {
      int idx = deg - f.m + i;
      prod[idx] = ((prod[idx] - c * mod[i]) % f.p + f.p) % f.p;
    }
  }
  prod.resize(f.m);
  return encode(prod, f.p);
}

}  // namespace

UnsupportedFieldError::UnsupportedFieldError(int q)
    : std::invalid_argument("unsupported order " + std::to_string(q) +
                            "; supported orders are 2, 3, 4, 5, 7, 8, 9") {}

std::span<const int> FieldSpec::supported_orders() { return kSupported; }

bool FieldSpec::is_supported(int q) {
  return std::find(kSupported.begin(), kSupported.end(), q) != kSupported.end();
}

FieldSpec FieldSpec::make(int q) {
  if (!is_supported(q)) throw UnsupportedFieldError(q);
  const FieldShape shape = shape_of(q);

  FieldSpec f;
  f.q_ = q;
  f.p_ = shape.p;
  f.m_ = shape.m;
  f.modulus_ = shape.modulus;

  for (int a = 0; a < q; ++a) {
    auto da = digits(a, shape.p, shape.m);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, shape.p, shape.m);
      std::vector<int> sum(shape.m);
      for (int i = 0; i < shape.m; ++i) sum[i] = (da[i] + db[i]) % shape.p;
      f.add_[a * kMaxOrder + b] = static_cast<Element>(encode(sum, shape.p));
      int prod = shape.m == 1 ? (a * b) % shape.p : poly_mul_mod(a, b, shape);
      f.mul_[a * kMaxOrder + b] = static_cast<Element>(prod);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * kMaxOrder + b] == 0) f.neg_[a] = static_cast<Element>(b);
      if (a != 0 && f.mul_[a * kMaxOrder + b] == 1) f.inv_[a] = static_cast<Element>(b);
    }
  }
  return f;
}

Element FieldSpec::inv(Element a) const {
  check(a);
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return inv_[a];
}

}  // namespace kpave
