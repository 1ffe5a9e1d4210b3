#include "kpave/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "kpave/gf2.hpp"
#include "kpave/loose.hpp"

namespace kpave {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::max_size: return "max-size";
    case SearchMode::nonexistence: return "nonexistence";
    case SearchMode::enumerate: return "enumerate";
  }
  return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  for (auto m : {SearchMode::max_size, SearchMode::nonexistence, SearchMode::enumerate})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

std::string_view to_string(NonexistenceStatus status) {
  switch (status) {
    case NonexistenceStatus::confirmed: return "confirmed";
    case NonexistenceStatus::counterexample: return "counterexample";
    case NonexistenceStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (!FieldSpec::is_supported(q)) throw UnsupportedFieldError(q);
  if (r < 1) throw std::invalid_argument("search rank must be at least 1");
  const int cap = q == 2 ? 20 : 12;
  if (r > cap) {
    throw CapacityError("search rank " + std::to_string(r) + " exceeds the cap of " +
                        std::to_string(cap) + " for GF(" + std::to_string(q) + ")");
  }
  SyndromeSpace probe(FieldSpec::make(q), r);  // throws on oversized state spaces
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (size_target && *size_target < 0) throw std::invalid_argument("negative size target");
}

FeasibilityState::FeasibilityState(FieldSpec field, int r, int k)
    : space_(std::move(field), r),
      threshold_(static_cast<std::uint8_t>(std::max(0, r - k))) {
  std::vector<std::uint8_t> base(space_.size(), threshold_);
  base[0] = 0;
  dist_.push_back(std::move(base));
}

bool FeasibilityState::feasible(std::uint32_t v) const { return dist_.back()[v] >= threshold_; }

void FeasibilityState::push(std::uint32_t v) {
  const auto& old = dist_.back();
  std::vector<std::uint8_t> next(old.size());
  const std::uint8_t cap = threshold_;
  auto step = [cap](std::uint8_t d) {
    return static_cast<std::uint8_t>(std::min<int>(cap, d + 1));
  };
  if (space_.field().is_binary()) {
    for (std::uint32_t s = 0; s < old.size(); ++s) next[s] = std::min(old[s], step(old[s ^ v]));
  } else {
    const auto multiples = space_.multiples(v);
    for (std::uint32_t s = 0; s < old.size(); ++s) {
      std::uint8_t best = old[s];
      for (std::uint32_t mv : multiples) best = std::min(best, step(old[space_.sub(s, mv)]));
      next[s] = best;
    }
  }
  dist_.push_back(std::move(next));
  columns_.push_back(v);
}

void FeasibilityState::pop() {
  if (columns_.empty()) throw std::logic_error("pop on empty feasibility state");
  dist_.pop_back();
  columns_.pop_back();
}

MatroidRep matroid_from_codes(const FieldSpec& field, int r, std::span<const std::uint32_t> codes) {
  const int n = static_cast<int>(codes.size());
  const auto q = static_cast<std::uint32_t>(field.order());
  std::vector<Element> entries(static_cast<std::size_t>(r) * n);
  for (int j = 0; j < n; ++j) {
    std::uint32_t v = codes[j];
    for (int i = 0; i < r; ++i) {
      entries[static_cast<std::size_t>(i) * n + j] = static_cast<Element>(v % q);
      v /= q;
    }
  }
  return MatroidRep(field, r, n, std::move(entries));
}

namespace {

constexpr std::size_t kNoCut = std::numeric_limits<std::size_t>::max();

struct Shared {
  explicit Shared(const SearchConfig& c) : cfg(c) {}
  const SearchConfig& cfg;
  std::atomic<int> global_best{0};
  std::atomic<std::size_t> cut_branch{kNoCut};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
};

struct Outcome {
  int best_size = 0;
  std::vector<std::uint32_t> best;
  bool counterexample = false;
  std::vector<std::vector<std::uint32_t>> collected;
};

// rank == r and no coloops, for a column set given by codes.
bool spans_without_coloops(const FieldSpec& field, int r, std::span<const std::uint32_t> codes) {
  if (field.is_binary()) {
    std::vector<std::uint64_t> vecs(codes.begin(), codes.end());
    if (gf2::rank_of(vecs) != r) return false;
    for (std::size_t skip = 0; skip < vecs.size(); ++skip) {
      gf2::XorBasis basis;
      for (std::size_t i = 0; i < vecs.size(); ++i)
        if (i != skip) basis.insert(vecs[i]);
      if (basis.size() != r) return false;
    }
    return true;
  }
  const MatroidRep m = matroid_from_codes(field, r, codes);
  return m.rank() == r && coloops(m).empty();
}

class Explorer {
 public:
  Explorer(Shared& shared, const FeasibilityState& root, std::size_t branch)
      : shared_(shared), cfg_(shared.cfg), state_(root), branch_(branch) {
    target_ = cfg_.size_target.value_or(cfg_.mode == SearchMode::nonexistence ? cfg_.r + 2
                                                                              : cfg_.r + 1);
  }

  // Explores the node `state_` currently describes and its subtree, drawing
  // further columns from `candidates` (ascending, all feasible here).
  void explore(const std::vector<std::uint32_t>& candidates) {
    if (stopped()) return;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > cfg_.node_budget) {
      shared_.budget_hit.store(true);
      return;
    }
    visit();
    if (stopped()) return;

    const auto n = state_.columns().size();
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (hopeless(n + (candidates.size() - i))) break;
      state_.push(candidates[i]);
      next.clear();
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (state_.feasible(candidates[j])) next.push_back(candidates[j]);
      explore(next);
      state_.pop();
      if (stopped()) return;
    }
  }

  // Runs one top-level branch: first extra column `first`.
  void run_branch(std::uint32_t first, const std::vector<std::uint32_t>& later) {
    state_.push(first);
    std::vector<std::uint32_t> cands;
    for (std::uint32_t c : later)
      if (state_.feasible(c)) cands.push_back(c);
    explore(cands);
    state_.pop();
  }

  Outcome& outcome() { return out_; }

 private:
  bool stopped() const {
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return true;
    if (cfg_.mode == SearchMode::nonexistence)
      return out_.counterexample || shared_.cut_branch.load() < branch_;
    if (cfg_.mode == SearchMode::enumerate) return out_.collected.size() >= cfg_.max_certificates;
    return false;
  }

  bool hopeless(std::size_t reachable) const {
    const auto size = static_cast<int>(reachable);
    if (cfg_.mode == SearchMode::max_size)
      return size < shared_.global_best.load(std::memory_order_relaxed) || size <= out_.best_size;
    return size < target_;
  }

  bool qualifies(bool allow_circuit) const {
    const auto cols = state_.columns();
    const int n = static_cast<int>(cols.size());
    if (!allow_circuit && n == cfg_.r + 1) return false;
    return spans_without_coloops(state_.space().field(), cfg_.r, cols);
  }

  void visit() {
    const auto cols = state_.columns();
    const int n = static_cast<int>(cols.size());
    switch (cfg_.mode) {
      case SearchMode::max_size:
        if (n > out_.best_size && n >= shared_.global_best.load() &&
            qualifies(!cfg_.exclude_circuit)) {
          out_.best_size = n;
          out_.best.assign(cols.begin(), cols.end());
          int seen = shared_.global_best.load();
          while (seen < n && !shared_.global_best.compare_exchange_weak(seen, n)) {
          }
        }
        break;
      case SearchMode::nonexistence:
        if (n >= target_ && qualifies(false)) {
          out_.counterexample = true;
          out_.best_size = n;
          out_.best.assign(cols.begin(), cols.end());
          std::size_t seen = shared_.cut_branch.load();
          while (seen > branch_ && !shared_.cut_branch.compare_exchange_weak(seen, branch_)) {
          }
        }
        break;
      case SearchMode::enumerate:
        if (n >= target_ && qualifies(true)) {
          out_.collected.emplace_back(cols.begin(), cols.end());
          out_.best_size = std::max(out_.best_size, n);
        }
        break;
    }
  }

  Shared& shared_;
  const SearchConfig& cfg_;
  FeasibilityState state_;
  std::size_t branch_;
  int target_ = 0;
  Outcome out_;
};

void verify_certificate(const MatroidRep& m, const SearchConfig& cfg) {
  if (m.rank() != cfg.r || !is_simple(m) || !coloops(m).empty() || !is_k_paving(m, cfg.k))
    throw std::logic_error("search produced a certificate that fails re-verification");
}

SearchResult search(const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const FieldSpec field = FieldSpec::make(cfg.q);

  FeasibilityState root(field, cfg.r, cfg.k);
  std::vector<std::uint32_t> seed;
  if (cfg.seed == SeedColumns::identity) {
    std::uint32_t unit = 1;
    for (int i = 0; i < cfg.r; ++i, unit *= static_cast<std::uint32_t>(cfg.q)) seed.push_back(unit);
  }
  for (std::uint32_t s : seed) {
    if (!root.feasible(s))
      throw std::invalid_argument("identity seed already violates the girth requirement");
    root.push(s);
  }
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v = 1; v < root.space().size(); ++v) {
    if (!root.space().is_normalized(v)) continue;
    if (std::find(seed.begin(), seed.end(), v) != seed.end()) continue;
    if (root.feasible(v)) candidates.push_back(v);
  }

  Shared shared(cfg);
  // Outcome 0 is the seed-only root; outcome b + 1 is top-level branch b.
  std::vector<Outcome> outcomes(candidates.size() + 1);
  {
    Explorer explorer(shared, root, 0);
    std::vector<std::uint32_t> none;
    explorer.explore(none);
    outcomes[0] = std::move(explorer.outcome());
    if (outcomes[0].counterexample) shared.cut_branch.store(0);
  }

  std::atomic<std::size_t> next_branch{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= candidates.size()) return;
      if (shared.budget_hit.load()) return;
      if (cfg.mode == SearchMode::nonexistence && shared.cut_branch.load() < b + 1) continue;
      Explorer explorer(shared, root, b + 1);
      std::vector<std::uint32_t> later(candidates.begin() + static_cast<std::ptrdiff_t>(b) + 1,
                                       candidates.end());
      explorer.run_branch(candidates[b], later);
      outcomes[b + 1] = std::move(explorer.outcome());
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(candidates.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  result.config = cfg;
  result.exhausted = !shared.budget_hit.load();
  result.nodes_visited = std::min(shared.nodes.load(), cfg.node_budget);

  switch (cfg.mode) {
    case SearchMode::max_size: {
      const Outcome* best = nullptr;
      for (const auto& o : outcomes)
        if (o.best_size > 0 && (!best || o.best_size > best->best_size)) best = &o;
      if (best) {
        result.best_size = best->best_size;
        result.certificate = matroid_from_codes(field, cfg.r, best->best);
      }
      break;
    }
    case SearchMode::nonexistence: {
      const auto found = std::find_if(outcomes.begin(), outcomes.end(),
                                      [](const Outcome& o) { return o.counterexample; });
      if (found != outcomes.end()) {
        result.status = NonexistenceStatus::counterexample;
        result.best_size = found->best_size;
        result.certificate = matroid_from_codes(field, cfg.r, found->best);
      } else {
        result.status =
            result.exhausted ? NonexistenceStatus::confirmed : NonexistenceStatus::inconclusive;
      }
      break;
    }
    case SearchMode::enumerate:
      for (const auto& o : outcomes) {
        for (const auto& cols : o.collected) {
          if (result.certificates.size() >= cfg.max_certificates) break;
          result.certificates.push_back(matroid_from_codes(field, cfg.r, cols));
          result.best_size = std::max(result.best_size, static_cast<int>(cols.size()));
        }
      }
      if (!result.certificates.empty()) result.certificate = result.certificates.front();
      break;
  }

  if (result.certificate) verify_certificate(*result.certificate, cfg);
  for (const auto& c : result.certificates) verify_certificate(c, cfg);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

SearchResult max_kpaving_size(const SearchConfig& config) {
  if (config.mode != SearchMode::max_size) throw std::invalid_argument("mode must be max-size");
  return search(config);
}

SearchResult nonexistence(const SearchConfig& config) {
  if (config.mode != SearchMode::nonexistence)
    throw std::invalid_argument("mode must be nonexistence");
  return search(config);
}

SearchResult enumerate_kpaving(const SearchConfig& config) {
  if (config.mode != SearchMode::enumerate) throw std::invalid_argument("mode must be enumerate");
  return search(config);
}

SearchResult run_search(const SearchConfig& config) { return search(config); }

}  // namespace kpave
