#pragma once

#include "kpave/matroid.hpp"

namespace kpave {

struct ExtremalConstruction {
  MatroidRep matroid;
  /// The column whose looseness index is exactly k.
  Label loose_element;
};

/// Simple binary matroid [I_r | Q] of size 2^k (r - k + 1) with a k-loose
/// element, for r >= 2 and 0 <= k <= r - 2.
///
/// Q starts with the loose element (zeros in the top k rows, ones below),
/// followed by one group per nonzero top pattern p in ascending order,
/// reading bit i of p as row i. Each group's lower r - k rows run through
/// the unit vectors in order, and groups whose pattern has weight at least
/// two also get the zero lower part as their last column.
ExtremalConstruction extremal_k_loose(int r, int k);

/// (m+1) x 2^m generator matrix of the first-order Reed-Muller code: the
/// columns are (1, x) for x in GF(2)^m, x in lexicographic order with the
/// first coordinate most significant. Requires m >= 2.
MatroidRep reed_muller_r1(int m);

/// [I_r | 1] over GF(2), a single circuit of size r + 1. Requires r >= 1.
MatroidRep circuit_matroid(int r);

}  // namespace kpave
