#include "kpave/random_matroids.hpp"

#include <algorithm>
#include <set>

#include "kpave/syndrome.hpp"

namespace kpave::random {

MatroidRep random_matrix(const FieldSpec& field, int rows, int cols, Rng& rng) {
  std::vector<Element> entries(static_cast<std::size_t>(rows) * cols);
  for (auto& x : entries) x = static_cast<Element>(below(rng, field.order()));
  return MatroidRep(field, rows, cols, std::move(entries));
}

MatroidRep random_simple_coloop_free(const FieldSpec& field, int r, int n, Rng& rng) {
  const SyndromeSpace space(field, r);
  const std::uint64_t points = (space.size() - 1) / static_cast<std::uint64_t>(field.order() - 1);
  if (r < 1 || n < r + 1 || static_cast<std::uint64_t>(n) > points)
    throw std::invalid_argument("no simple coloop-free matroid with these parameters");

  std::set<std::uint32_t> units;
  for (int i = 0; i < r; ++i) {
    std::uint32_t u = 1;
    for (int j = 0; j < i; ++j) u *= static_cast<std::uint32_t>(field.order());
    units.insert(u);
  }
  for (;;) {
    std::set<std::uint32_t> chosen;
    while (static_cast<int>(chosen.size()) < n - r) {
      const auto v = space.normalize(static_cast<std::uint32_t>(1 + below(rng, space.size() - 1)));
      if (!units.count(v)) chosen.insert(v);
    }
    // Row i of Q must be nonzero somewhere or unit i is a coloop.
    bool covered = true;
    for (int i = 0; i < r && covered; ++i)
      covered = std::any_of(chosen.begin(), chosen.end(),
                            [&](std::uint32_t v) { return space.coordinate(v, i) != 0; });
    if (!covered) continue;

    std::vector<Element> entries(static_cast<std::size_t>(r) * n, 0);
    for (int i = 0; i < r; ++i) entries[static_cast<std::size_t>(i) * n + i] = 1;
    int j = r;
    for (std::uint32_t v : chosen) {
      for (int i = 0; i < r; ++i) entries[static_cast<std::size_t>(i) * n + j] = space.coordinate(v, i);
      ++j;
    }
    return scramble(MatroidRep(field, r, n, std::move(entries)), rng);
  }
}

MatroidRep scramble(const MatroidRep& m, Rng& rng) {
  const FieldSpec& f = m.field();
  const int r = m.rows();
  MatroidRep mix = random_matrix(f, r, r, rng);
  while (mix.rank() != r) mix = random_matrix(f, r, r, rng);

  std::vector<int> perm(m.size());
  for (int i = 0; i < m.size(); ++i) perm[i] = i;
  for (int i = m.size() - 1; i > 0; --i)
    std::swap(perm[i], perm[below(rng, static_cast<std::uint64_t>(i) + 1)]);

  std::vector<Element> entries(static_cast<std::size_t>(r) * m.size(), 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m.size(); ++j) {
      Element acc = 0;
      for (int t = 0; t < r; ++t) acc = f.add(acc, f.mul(mix.at(i, t), m.at(t, perm[j])));
      entries[static_cast<std::size_t>(i) * m.size() + j] = acc;
    }
  }
  return MatroidRep(f, r, m.size(), std::move(entries));
}

SeriesExtension series_extend(const MatroidRep& m, Label x) {
  m.check_label(x);
  const int rows = m.rows() + 1;
  const int n = m.size() + 1;
  std::vector<Element> entries(static_cast<std::size_t>(rows) * n, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.size(); ++j) entries[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  entries[static_cast<std::size_t>(m.rows()) * n + x] = 1;
  entries[static_cast<std::size_t>(m.rows()) * n + m.size()] = 1;
  return {MatroidRep(m.field(), rows, n, std::move(entries)), x, m.size()};
}

}  // namespace kpave::random
