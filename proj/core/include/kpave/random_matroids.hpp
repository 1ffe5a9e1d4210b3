#pragma once

#include <cstdint>
#include <random>

#include "kpave/matroid.hpp"

namespace kpave::random {

/// Seeded generator; all draws go through below() so streams are
/// reproducible across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

/// Uniform entries; neither simple nor full rank in general.
MatroidRep random_matrix(const FieldSpec& field, int rows, int cols, Rng& rng);

/// Simple, coloop-free matroid of rank r on n elements: [I_r | Q] with
/// distinct random projective points in Q, then scrambled.
/// Requires r + 1 <= n <= (q^r - 1)/(q - 1).
MatroidRep random_simple_coloop_free(const FieldSpec& field, int r, int n, Rng& rng);

/// Random invertible row transformation followed by a column shuffle.
MatroidRep scramble(const MatroidRep& m, Rng& rng);

struct SeriesExtension {
  MatroidRep matroid;
  Label e;
  Label f;
};

/// Replaces x by a series pair {e, f}: one extra row that is zero except
/// for e = (x; 1) and the new column f = (0; 1). Circuits through x gain f
/// and the rank grows by one.
SeriesExtension series_extend(const MatroidRep& m, Label x);

}  // namespace kpave::random
