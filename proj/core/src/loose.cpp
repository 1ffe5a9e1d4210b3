#include "kpave/loose.hpp"

#include <algorithm>
#include <limits>

namespace kpave {

namespace {

constexpr std::uint8_t kUnseen = 0xFF;

bool all_zero(const std::vector<Element>& v) {
  return std::all_of(v.begin(), v.end(), [](Element x) { return x == 0; });
}

// Echelon basis grown one vector at a time; every stored vector has a unit
// entry at its pivot and zeros at the pivots of earlier vectors.
struct Echelon {
  const FieldSpec* field;
  std::vector<std::vector<Element>> rows;
  std::vector<int> pivots;

  std::vector<Element> reduce(std::vector<Element> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Element c = v[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = field->sub(v[j], field->mul(c, rows[i][j]));
    }
    return v;
  }

  // Appends an already-reduced nonzero vector, normalizing its pivot.
  void push(std::vector<Element> v) {
    int p = 0;
    while (v[p] == 0) ++p;
    const Element s = field->inv(v[p]);
    for (auto& x : v) x = field->mul(x, s);
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }

  // Removes the component along the most recent vector.
  std::vector<Element> reduce_by_last(std::vector<Element> v) const {
    const auto& b = rows.back();
    const Element c = v[pivots.back()];
    if (c != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = field->sub(v[j], field->mul(c, b[j]));
    return v;
  }
};

ElementSet with_element(ElementSet s, Label e) {
  s.push_back(e);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

int Girth::value() const {
  if (!value_) throw std::logic_error("girth is infinite");
  return *value_;
}

std::string Girth::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

GirthEngine::GirthEngine(const MatroidRep& m, AnalysisLimits limits)
    : field_(m.field()), rank_(m.rank()), reduced_(row_reduce(m)) {
  const int cap = field_.is_binary() ? limits.max_binary_rank : limits.max_rank;
  if (rank_ > cap) {
    throw CapacityError("rank " + std::to_string(rank_) + " exceeds the local-girth cap of " +
                        std::to_string(cap) + " for " + field_.name());
  }
  columns_.reserve(m.size());
  for (Label c = 0; c < m.size(); ++c) columns_.push_back(reduced_.column(c));
  if (field_.is_binary()) codes_ = column_codes(reduced_);
}

std::optional<int> GirthEngine::span_count(Label e, int max_count, ElementSet* witness) const {
  reduced_.check_label(e);
  if (max_count < 0) return std::nullopt;
  return field_.is_binary() ? binary_span_count(e, max_count, witness)
                            : generic_span_count(e, max_count, witness);
}

std::optional<int> GirthEngine::binary_span_count(Label e, int max_count,
                                                  ElementSet* witness) const {
  const std::uint32_t target = codes_[e];
  if (target == 0) {
    if (witness) witness->clear();
    return 0;
  }
  max_count = std::min(max_count, rank_);

  std::vector<std::uint32_t> gens;
  for (Label c = 0; c < size(); ++c)
    if (c != e && codes_[c] != 0) gens.push_back(codes_[c]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<std::uint8_t> dist(std::size_t{1} << rank_, kUnseen);
  dist[0] = 0;
  std::vector<std::uint32_t> frontier{0}, next;
  for (int level = 0; level < max_count && !frontier.empty(); ++level) {
    next.clear();
    for (std::uint32_t s : frontier) {
      for (std::uint32_t g : gens) {
        const std::uint32_t ns = s ^ g;
        if (dist[ns] == kUnseen) {
          dist[ns] = static_cast<std::uint8_t>(level + 1);
          next.push_back(ns);
        }
      }
    }
    if (dist[target] != kUnseen) break;
    frontier.swap(next);
  }
  if (dist[target] == kUnseen) return std::nullopt;
  const int count = dist[target];

  if (witness) {
    // Lexicographic DFS; dist[] (exact for every state within `count`
    // steps) prunes branches that cannot finish in time.
    std::vector<Label> chosen;
    auto dfs = [&](auto&& self, std::uint32_t s, Label start, int remaining) -> bool {
      if (remaining == 0) return s == 0;
      for (Label j = start; j < size(); ++j) {
        if (j == e || codes_[j] == 0) continue;
        const std::uint32_t ns = s ^ codes_[j];
        if (dist[ns] == kUnseen || dist[ns] > remaining - 1) continue;
        chosen.push_back(j);
        if (self(self, ns, j + 1, remaining - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    dfs(dfs, target, 0, count);
    *witness = chosen;
  }
  return count;
}

std::optional<int> GirthEngine::generic_span_count(Label e, int max_count,
                                                   ElementSet* witness) const {
  const auto& target = columns_[e];
  if (all_zero(target)) {
    if (witness) witness->clear();
    return 0;
  }
  // A coloop is outside the span of the other columns.
  std::vector<Label> others;
  for (Label c = 0; c < size(); ++c)
    if (c != e) others.push_back(c);
  if (rank_of_columns(reduced_, others) < rank_) return std::nullopt;

  max_count = std::min(max_count, rank_);
  const int n = size();
  Echelon basis{&field_, {}, {}};
  std::vector<Label> chosen;

  // Enumerates independent subsets of exactly `depth` columns in
  // lexicographic order; the first one spanning the target wins.
  auto dfs = [&](auto&& self, Label start, int left, const std::vector<Element>& residual) -> bool {
    for (Label j = start; j < n; ++j) {
      if (j == e) continue;
      const int available = (n - j) - (e > j ? 1 : 0);
      if (available < left) break;
      auto v = basis.reduce(columns_[j]);
      if (all_zero(v)) continue;
      basis.push(std::move(v));
      chosen.push_back(j);
      const auto next_residual = basis.reduce_by_last(residual);
      const bool done = left == 1 ? all_zero(next_residual)
                                  : self(self, j + 1, left - 1, next_residual);
      if (done) return true;
      chosen.pop_back();
      basis.pop();
    }
    return false;
  };

  for (int depth = 1; depth <= max_count; ++depth) {
    if (dfs(dfs, 0, depth, target)) {
      if (witness) *witness = chosen;
      return depth;
    }
  }
  return std::nullopt;
}

LocalGirth GirthEngine::local_girth(Label e) const {
  ElementSet witness;
  auto count = span_count(e, rank_, &witness);
  if (!count) return {Girth::infinite(), {}};
  return {Girth::finite(*count + 1), with_element(std::move(witness), e)};
}

Girth GirthEngine::local_girth_value(Label e) const {
  auto count = span_count(e, rank_, nullptr);
  return count ? Girth::finite(*count + 1) : Girth::infinite();
}

bool GirthEngine::local_girth_exceeds(Label e, int bound) const {
  return !span_count(e, bound - 1, nullptr).has_value();
}

Girth GirthEngine::girth() const {
  Girth best = Girth::infinite();
  for (Label e = 0; e < size(); ++e) {
    const int limit = best.is_finite() ? best.value() - 2 : rank_;
    if (auto count = span_count(e, limit, nullptr)) best = Girth::finite(*count + 1);
    if (best == Girth::finite(1)) break;
  }
  return best;
}

LocalGirth local_girth(const MatroidRep& m, Label e) { return GirthEngine(m).local_girth(e); }

Girth girth(const MatroidRep& m) { return GirthEngine(m).girth(); }

namespace {

LooseReport make_report(Label e, int rank, LocalGirth lg) {
  LooseReport rep;
  rep.element = e;
  rep.local_girth = lg.girth;
  if (lg.girth.is_infinite()) {
    rep.coloop = true;
    rep.looseness_index = 0;
  } else {
    rep.looseness_index = std::max(0, rank - lg.girth.value() + 1);
    rep.witness = std::move(lg.witness);
  }
  return rep;
}

}  // namespace

LooseReport looseness_index(const MatroidRep& m, Label e) {
  GirthEngine engine(m);
  return make_report(e, m.rank(), engine.local_girth(e));
}

bool is_k_loose(const MatroidRep& m, Label e, int k) {
  m.check_label(e);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return GirthEngine(m).local_girth_exceeds(e, m.rank() - k);
}

bool is_k_paving(const MatroidRep& m, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int bound = m.rank() - k;
  if (bound < 1) return true;
  GirthEngine engine(m);
  for (Label e = 0; e < m.size(); ++e)
    if (!engine.local_girth_exceeds(e, bound)) return false;
  return true;
}

PavingReport paving_report(const MatroidRep& m) {
  GirthEngine engine(m);
  PavingReport rep;
  rep.rank = m.rank();
  for (Label e = 0; e < m.size(); ++e) {
    rep.per_element.push_back(make_report(e, rep.rank, engine.local_girth(e)));
    rep.girth = std::min(rep.girth, rep.per_element.back().local_girth);
  }
  rep.paving_index = rep.girth.is_infinite() ? 0 : std::max(0, rep.rank - rep.girth.value() + 1);
  return rep;
}

std::vector<ElementSet> circuits_through_oracle(const MatroidRep& m, Label e, int size_cap,
                                                std::uint64_t budget) {
  m.check_label(e);
  if (size_cap < 0 || size_cap > m.size())
    throw std::invalid_argument("size cap must lie in [0, n]");

  // Worst-case number of subsets containing e: sum_{s<cap} C(n-1, s).
  const std::uint64_t others = static_cast<std::uint64_t>(m.size() - 1);
  std::uint64_t estimate = 0;
  std::uint64_t binom = 1;
  for (int s = 0; s < size_cap; ++s) {
    if (s > 0) {
      binom = binom * (others - static_cast<std::uint64_t>(s) + 1) / static_cast<std::uint64_t>(s);
    }
    estimate += binom;
    if (estimate > budget) {
      throw BudgetError("circuit enumeration with cap " + std::to_string(size_cap) + " over " +
                        std::to_string(m.size()) + " elements exceeds the budget of " +
                        std::to_string(budget) + " subsets");
    }
  }

  std::vector<ElementSet> circuits;
  if (size_cap == 0) return circuits;
  std::vector<Label> current{e};
  if (rank_of_columns(m, current) == 0) {
    circuits.push_back(current);
    return circuits;
  }

  auto is_circuit = [&](const std::vector<Label>& set) {
    const int size = static_cast<int>(set.size());
    if (rank_of_columns(m, set) != size - 1) return false;
    std::vector<Label> smaller;
    for (int skip = 0; skip < size; ++skip) {
      smaller.clear();
      for (int i = 0; i < size; ++i)
        if (i != skip) smaller.push_back(set[i]);
      if (rank_of_columns(m, smaller) != size - 1) return false;
    }
    return true;
  };

  // `current` is always independent; extend by labels above `start`.
  auto extend = [&](auto&& self, Label start) -> void {
    if (static_cast<int>(current.size()) >= size_cap) return;
    for (Label x = start; x < m.size(); ++x) {
      if (x == e) continue;
      current.push_back(x);
      const int size = static_cast<int>(current.size());
      if (rank_of_columns(m, current) == size) {
        if (size < size_cap) self(self, x + 1);
      } else if (is_circuit(current)) {
        ElementSet c = current;
        std::sort(c.begin(), c.end());
        circuits.push_back(std::move(c));
      }
      current.pop_back();
    }
  };
  extend(extend, 0);

  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

namespace {

// Basis containing `core`, extended by ascending labels outside `avoid`.
ElementSet extend_to_basis(const MatroidRep& m, const ElementSet& core, Label avoid) {
  ElementSet basis = core;
  for (Label c = 0; c < m.size() && static_cast<int>(basis.size()) < m.rank(); ++c) {
    if (c == avoid || std::binary_search(core.begin(), core.end(), c)) continue;
    basis.push_back(c);
    if (rank_of_columns(m, basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

ElementSet without(const ElementSet& s, Label x) {
  ElementSet out;
  for (Label y : s)
    if (y != x) out.push_back(y);
  return out;
}

}  // namespace

ZeroCountCheck loose_zero_count_check(const MatroidRep& m, Label e) {
  if (!m.is_binary()) throw std::invalid_argument("zero-count property is stated for GF(2)");
  ZeroCountCheck out;
  const LocalGirth lg = local_girth(m, e);
  if (lg.girth.is_infinite()) return out;
  const int r = m.rank();
  const int k = r - lg.girth.value() + 1;
  out.applicable = true;
  out.k = k;

  const StandardForm sf = standardize(m, extend_to_basis(m, without(lg.witness, e), e));
  const auto& p = sf.base;
  const int e_col = static_cast<int>(std::find(sf.col_map.begin(), sf.col_map.end(), e) -
                                     sf.col_map.begin());
  // Top block: the rows where e's column is zero.
  std::vector<int> top, root;
  for (int i = 0; i < r; ++i) (p.at(i, e_col) == 0 ? top : root).push_back(i);

  for (int j = r; j < p.size(); ++j) {
    if (j == e_col) continue;
    int zeros_top = 0;
    int nonzero_root = 0;
    for (int i : top) zeros_top += p.at(i, j) == 0;
    for (int i : root) nonzero_root += p.at(i, j) != 0;
    ++out.checked;
    if (zeros_top + nonzero_root > k + 1) {
      if (out.violations++ == 0) {
        out.first_violation = "element " + std::to_string(sf.col_map[j]) + ": " +
                              std::to_string(zeros_top) + " + " + std::to_string(nonzero_root) +
                              " > " + std::to_string(k + 1);
      }
    }
  }
  return out;
}

ZeroCountCheck paving_zero_count_check(const MatroidRep& m, int max_terms) {
  if (!m.is_binary()) throw std::invalid_argument("zero-count property is stated for GF(2)");
  ZeroCountCheck out;
  GirthEngine engine(m);
  const Girth g = engine.girth();
  if (g.is_infinite()) return out;
  const int r = m.rank();
  const int k = r - g.value() + 1;
  out.applicable = true;
  out.k = k;

  Label e = 0;
  LocalGirth lg = engine.local_girth(e);
  while (lg.girth != g) lg = engine.local_girth(++e);

  const StandardForm sf = standardize(m, extend_to_basis(m, without(lg.witness, e), e));
  const MatroidRep& p = sf.base;
  const SyndromeSpace space(m.field(), r);
  std::vector<std::uint32_t> q_cols;
  const auto codes = column_codes(p);
  for (int j = r; j < p.size(); ++j) q_cols.push_back(codes[j]);

  const int count = static_cast<int>(q_cols.size());
  std::vector<int> pick;
  auto visit = [&](auto&& self, int start, std::uint32_t sum) -> void {
    const int terms = static_cast<int>(pick.size());
    if (terms > 0) {
      ++out.checked;
      const int zeros = space.zero_count(sum);
      if (zeros > k + terms - 1 && out.violations++ == 0) {
        out.first_violation = "sum of " + std::to_string(terms) + " columns has " +
                              std::to_string(zeros) + " zeros, limit " +
                              std::to_string(k + terms - 1);
      }
    }
    if (terms == max_terms) return;
    for (int j = start; j < count; ++j) {
      pick.push_back(j);
      self(self, j + 1, space.add(sum, q_cols[j]));
      pick.pop_back();
    }
  };
  visit(visit, 0, 0);
  return out;
}

}  // namespace kpave
