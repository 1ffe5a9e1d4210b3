#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kpave/field.hpp"

namespace kpave {

/// Ground-set element of a represented matroid: its column index.
using Label = int;
/// Sorted, duplicate-free set of labels.
using ElementSet = std::vector<Label>;

/// An r x n matrix over GF(q); the matroid is its column matroid.
/// Rows may be dependent; rank is computed at construction.
class MatroidRep {
 public:
  MatroidRep(FieldSpec field, int rows, int cols, std::vector<Element> entries);

  /// Convenience constructor from row lists. `cols` is only consulted when
  /// `rows` is empty.
  static MatroidRep from_rows(FieldSpec field, const std::vector<std::vector<int>>& rows,
                              int cols = 0);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  /// Ground-set size n.
  int size() const { return cols_; }
  int rank() const { return rank_; }
  bool is_binary() const { return field_.is_binary(); }

  Element at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * cols_ + col];
  }
  std::span<const Element> entries() const { return entries_; }
  std::vector<Element> column(Label col) const;

  void check_label(Label e) const;

  friend bool operator==(const MatroidRep& a, const MatroidRep& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  int rows_;
  int cols_;
  std::vector<Element> entries_;
  int rank_ = 0;
};

inline int rank(const MatroidRep& m) { return m.rank(); }

/// Rank of the submatrix formed by the given columns.
int rank_of_columns(const MatroidRep& m, std::span<const Label> cols);

/// [I_r | Q] with respect to a basis.
struct StandardForm {
  /// rank-many rows; column i < rank is the i-th unit vector.
  MatroidRep base;
  /// basis_labels[i] is the original label sitting at identity column i.
  ElementSet basis_labels;
  /// col_map[j] is the original label of standard-form column j.
  std::vector<Label> col_map;
};

class BasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Standard form on the greedy leftmost basis.
StandardForm standardize(const MatroidRep& m);
/// Standard form on a given basis (sorted labels become identity columns
/// in ascending order). Throws BasisError if it is not a basis.
StandardForm standardize(const MatroidRep& m, const ElementSet& basis);
/// Standard form on the greedy leftmost basis disjoint from `avoid`;
/// nullopt when every basis meets `avoid`.
std::optional<StandardForm> standardize_avoiding(const MatroidRep& m, const ElementSet& avoid);

/// Row-reduced echelon form with zero rows removed; same column order.
MatroidRep row_reduce(const MatroidRep& m);

bool is_simple(const MatroidRep& m);
ElementSet coloops(const MatroidRep& m);

/// {e,f} is a cocircuit: deleting both drops the rank by one while
/// deleting either alone does not.
bool is_cocircuit_pair(const MatroidRep& m, Label e, Label f);

struct Deletion {
  MatroidRep matroid;
  /// label_map[new_label] = old label
  std::vector<Label> label_map;
};

Deletion delete_elements(const MatroidRep& m, const ElementSet& s);

/// True iff M is U_{r,r+1}: n = rank + 1 and the kernel has full support.
bool is_circuit_matroid(const MatroidRep& m);

/// Columns of a matrix with rank-many rows encoded as integers
/// sum_i entry(i) * q^i. Requires q^rows to fit in 32 bits.
std::vector<std::uint32_t> column_codes(const MatroidRep& m);

}  // namespace kpave
