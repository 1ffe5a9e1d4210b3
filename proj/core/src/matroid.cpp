#include "kpave/matroid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kpave/gf2.hpp"

namespace kpave {

namespace {

// Dense working copy for elimination over a general small field.
struct Dense {
  FieldSpec field;
  int rows;
  int cols;
  std::vector<Element> a;

  Element& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }

  void swap_rows(int x, int y) {
    if (x == y) return;
    for (int c = 0; c < cols; ++c) std::swap(at(x, c), at(y, c));
  }

  // Make (row, col) a unit pivot and clear the column elsewhere.
  void pivot(int row, int col) {
    const Element s = field.inv(at(row, col));
    for (int c = 0; c < cols; ++c) at(row, c) = field.mul(at(row, c), s);
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Element factor = at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < cols; ++c)
        at(r, c) = field.sub(at(r, c), field.mul(factor, at(row, c)));
    }
  }
};

Dense dense_copy(const MatroidRep& m) {
  return Dense{m.field(), m.rows(), m.size(),
               std::vector<Element>(m.entries().begin(), m.entries().end())};
}

struct Reduction {
  Dense matrix;
  std::vector<Label> pivots;  // pivots[i] is the pivot column of row i
};

// Gauss-Jordan pivoting on candidate columns in the given order. A
// candidate with no available pivot row is skipped.
Reduction reduce_on(const MatroidRep& m, std::span<const Label> candidates) {
  Reduction red{dense_copy(m), {}};
  Dense& d = red.matrix;
  int next_row = 0;
  for (Label c : candidates) {
    if (next_row == d.rows) break;
    int pivot_row = -1;
    for (int r = next_row; r < d.rows; ++r) {
      if (d.at(r, c) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    d.swap_rows(next_row, pivot_row);
    d.pivot(next_row, c);
    red.pivots.push_back(c);
    ++next_row;
  }
  return red;
}

int generic_rank(Dense d) {
  int rank = 0;
  for (int c = 0; c < d.cols && rank < d.rows; ++c) {
    int pivot_row = -1;
    for (int r = rank; r < d.rows; ++r) {
      if (d.at(r, c) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    d.swap_rows(rank, pivot_row);
    const Element s = d.field.inv(d.at(rank, c));
    for (int r = rank + 1; r < d.rows; ++r) {
      const Element factor = d.field.mul(d.at(r, c), s);
      if (factor == 0) continue;
      for (int cc = c; cc < d.cols; ++cc)
        d.at(r, cc) = d.field.sub(d.at(r, cc), d.field.mul(factor, d.at(rank, cc)));
    }
    ++rank;
  }
  return rank;
}

int compute_rank(const FieldSpec& field, int rows, int cols, std::span<const Element> entries) {
  if (rows == 0 || cols == 0) return 0;
  if (field.is_binary()) {
    gf2::BitMatrix bm(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (entries[static_cast<std::size_t>(r) * cols + c] != 0) bm.set(r, c, true);
    return bm.eliminate();
  }
  return generic_rank(Dense{field, rows, cols,
                            std::vector<Element>(entries.begin(), entries.end())});
}

StandardForm assemble(const MatroidRep& m, Reduction red) {
  const int r = static_cast<int>(red.pivots.size());
  std::vector<Label> order = red.pivots;
  std::vector<bool> is_pivot(m.size(), false);
  for (Label p : red.pivots) is_pivot[p] = true;
  for (Label c = 0; c < m.size(); ++c)
    if (!is_pivot[c]) order.push_back(c);

  std::vector<Element> entries(static_cast<std::size_t>(r) * m.size());
  for (int row = 0; row < r; ++row)
    for (int j = 0; j < m.size(); ++j)
      entries[static_cast<std::size_t>(row) * m.size() + j] = red.matrix.at(row, order[j]);

  return StandardForm{MatroidRep(m.field(), r, m.size(), std::move(entries)), red.pivots,
                      std::move(order)};
}

bool is_sorted_unique(const ElementSet& s) {
  return std::adjacent_find(s.begin(), s.end(), [](Label a, Label b) { return a >= b; }) ==
         s.end();
}

}  // namespace

MatroidRep::MatroidRep(FieldSpec field, int rows, int cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("matrix has " + std::to_string(entries_.size()) +
                                " entries, expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  for (Element e : entries_) {
    if (!field_.contains(e)) {
      throw std::out_of_range("entry " + std::to_string(e) + " is not an element of " +
                              field_.name());
    }
  }
  rank_ = compute_rank(field_, rows_, cols_, entries_);
}

MatroidRep MatroidRep::from_rows(FieldSpec field, const std::vector<std::vector<int>>& rows,
                                 int cols) {
  const int n = rows.empty() ? cols : static_cast<int>(rows.front().size());
  std::vector<Element> entries;
  entries.reserve(rows.size() * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged matrix rows");
    for (int v : row) {
      if (!field.contains(v)) {
        throw std::out_of_range("entry " + std::to_string(v) + " is not an element of " +
                                field.name());
      }
      entries.push_back(static_cast<Element>(v));
    }
  }
  return MatroidRep(std::move(field), static_cast<int>(rows.size()), n, std::move(entries));
}

std::vector<Element> MatroidRep::column(Label col) const {
  check_label(col);
  std::vector<Element> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, col);
  return out;
}

void MatroidRep::check_label(Label e) const {
  if (e < 0 || e >= cols_) {
    throw std::out_of_range("element " + std::to_string(e) + " not in ground set of size " +
                            std::to_string(cols_));
  }
}

int rank_of_columns(const MatroidRep& m, std::span<const Label> cols) {
  const int k = static_cast<int>(cols.size());
  std::vector<Element> sub(static_cast<std::size_t>(m.rows()) * k);
  for (int r = 0; r < m.rows(); ++r)
    for (int j = 0; j < k; ++j) sub[static_cast<std::size_t>(r) * k + j] = m.at(r, cols[j]);
  return compute_rank(m.field(), m.rows(), k, sub);
}

StandardForm standardize(const MatroidRep& m) {
  std::vector<Label> all(m.size());
  for (Label c = 0; c < m.size(); ++c) all[c] = c;
  return assemble(m, reduce_on(m, all));
}

StandardForm standardize(const MatroidRep& m, const ElementSet& basis) {
  if (!is_sorted_unique(basis)) throw BasisError("basis labels must be sorted and distinct");
  for (Label b : basis) m.check_label(b);
  if (static_cast<int>(basis.size()) != m.rank()) {
    throw BasisError("proposed basis has " + std::to_string(basis.size()) +
                     " elements but the rank is " + std::to_string(m.rank()));
  }
  Reduction red = reduce_on(m, basis);
  if (red.pivots.size() != basis.size()) throw BasisError("proposed basis is dependent");
  return assemble(m, std::move(red));
}

std::optional<StandardForm> standardize_avoiding(const MatroidRep& m, const ElementSet& avoid) {
  for (Label a : avoid) m.check_label(a);
  std::vector<Label> candidates;
  for (Label c = 0; c < m.size(); ++c)
    if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) candidates.push_back(c);
  Reduction red = reduce_on(m, candidates);
  if (static_cast<int>(red.pivots.size()) < m.rank()) return std::nullopt;
  return assemble(m, std::move(red));
}

MatroidRep row_reduce(const MatroidRep& m) {
  std::vector<Label> all(m.size());
  for (Label c = 0; c < m.size(); ++c) all[c] = c;
  Reduction red = reduce_on(m, all);
  const int r = static_cast<int>(red.pivots.size());
  std::vector<Element> entries(red.matrix.a.begin(),
                               red.matrix.a.begin() + static_cast<std::ptrdiff_t>(r) * m.size());
  return MatroidRep(m.field(), r, m.size(), std::move(entries));
}

bool is_simple(const MatroidRep& m) {
  const FieldSpec& f = m.field();
  std::set<std::vector<Element>> seen;
  for (Label c = 0; c < m.size(); ++c) {
    auto col = m.column(c);
    auto lead = std::find_if(col.begin(), col.end(), [](Element x) { return x != 0; });
    if (lead == col.end()) return false;
    const Element s = f.inv(*lead);
    for (auto& x : col) x = f.mul(x, s);
    if (!seen.insert(std::move(col)).second) return false;
  }
  return true;
}

ElementSet coloops(const MatroidRep& m) {
  // In [I_r | Q], basis element i is a coloop iff row i of Q is zero;
  // non-basis elements are never coloops.
  StandardForm sf = standardize(m);
  const int r = sf.base.rows();
  ElementSet out;
  for (int i = 0; i < r; ++i) {
    bool zero_row = true;
    for (int j = r; j < sf.base.size() && zero_row; ++j) zero_row = sf.base.at(i, j) == 0;
    if (zero_row) out.push_back(sf.basis_labels[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cocircuit_pair(const MatroidRep& m, Label e, Label f) {
  m.check_label(e);
  m.check_label(f);
  if (e == f) throw std::invalid_argument("cocircuit pair needs two distinct elements");
  std::vector<Label> without_e, without_f, without_both;
  for (Label c = 0; c < m.size(); ++c) {
    if (c != e) without_e.push_back(c);
    if (c != f) without_f.push_back(c);
    if (c != e && c != f) without_both.push_back(c);
  }
  const int r = m.rank();
  return rank_of_columns(m, without_both) == r - 1 && rank_of_columns(m, without_e) == r &&
         rank_of_columns(m, without_f) == r;
}

Deletion delete_elements(const MatroidRep& m, const ElementSet& s) {
  for (Label x : s) m.check_label(x);
  std::vector<Label> keep;
  for (Label c = 0; c < m.size(); ++c)
    if (std::find(s.begin(), s.end(), c) == s.end()) keep.push_back(c);
  const int k = static_cast<int>(keep.size());
  std::vector<Element> entries(static_cast<std::size_t>(m.rows()) * k);
  for (int r = 0; r < m.rows(); ++r)
    for (int j = 0; j < k; ++j) entries[static_cast<std::size_t>(r) * k + j] = m.at(r, keep[j]);
  return Deletion{MatroidRep(m.field(), m.rows(), k, std::move(entries)), std::move(keep)};
}

bool is_circuit_matroid(const MatroidRep& m) {
  // With n = r + 1 the kernel is one-dimensional and an element lies in its
  // support exactly when it is not a coloop.
  return m.size() == m.rank() + 1 && coloops(m).empty();
}

std::vector<std::uint32_t> column_codes(const MatroidRep& m) {
  const int q = m.field().order();
  std::uint64_t space = 1;
  for (int r = 0; r < m.rows(); ++r) {
    space *= static_cast<std::uint64_t>(q);
    if (space > (std::uint64_t{1} << 32))
      throw std::length_error("column code space exceeds 32 bits");
  }
  std::vector<std::uint32_t> codes(m.size(), 0);
  for (Label c = 0; c < m.size(); ++c) {
    std::uint64_t code = 0;
    for (int r = m.rows() - 1; r >= 0; --r) code = code * q + m.at(r, c);
    codes[c] = static_cast<std::uint32_t>(code);
  }
  return codes;
}

}  // namespace kpave
