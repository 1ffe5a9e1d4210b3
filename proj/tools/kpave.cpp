// kpave: girth, looseness and paving analysis of represented matroids.
//
// Exit codes: 0 ok, 1 bound violation or failed verification, 2 usage,
// parse or configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kpave/bounds.hpp"
#include "kpave/constructions.hpp"
#include "kpave/loose.hpp"
#include "kpave/matrix_io.hpp"
#include "kpave/report.hpp"
#include "kpave/search.hpp"
#include "kpave/verify.hpp"

namespace {

using namespace kpave;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        os << (i ? "  " : "");
        if (i + 1 == rows_[r].size()) {
          os << rows_[r][i];
        } else {
          os << std::left << std::setw(static_cast<int>(width[i])) << rows_[r][i];
        }
      }
      os << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
        os << std::string(total, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

MatrixFile load(const std::string& path) {
  if (path == "-") return parse_matrix(std::cin);
  std::ifstream probe(path);
  if (!probe) throw UsageError("cannot open " + path);
  return parse_matrix(probe);
}

void emit_json(const Json& report) { std::cout << report.dump(2) << '\n'; }

int default_threads() {
  if (const char* env = std::getenv("KPAVE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KPAVE_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeOptions {
  std::string file;
  std::optional<int> element;
  std::optional<int> k;
  bool json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  const MatrixFile mf = load(opt.file);
  const MatroidRep& m = mf.matroid;
  if (opt.k && *opt.k < 0) throw UsageError("--k must be non-negative");

  if (opt.element) {
    m.check_label(*opt.element);
    const LooseReport lr = looseness_index(m, *opt.element);
    if (opt.json) {
      Json item = to_json(lr);
      if (opt.k) {
        item["k"] = *opt.k;
        item["is_k_loose"] = is_k_loose(m, *opt.element, *opt.k);
      }
      emit_json(make_report("analyze", std::nullopt, &m, Json::array({item})));
      return kExitOk;
    }
    std::cout << "element " << lr.element << ": local girth " << lr.local_girth.to_string()
              << ", looseness index " << lr.looseness_index
              << (lr.coloop ? " (coloop)" : "") << '\n';
    if (!lr.coloop) std::cout << "witness circuit " << join(lr.witness) << '\n';
    if (opt.k) {
      std::cout << "is " << *opt.k << "-loose: "
                << (is_k_loose(m, *opt.element, *opt.k) ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }

  const PavingReport pr = paving_report(m);
  if (opt.json) {
    Json item = to_json(pr);
    if (opt.k) {
      item["k"] = *opt.k;
      item["is_k_paving"] = is_k_paving(m, *opt.k);
      for (auto& e : item["per_element"])
        e["is_k_loose"] = is_k_loose(m, e["element"].get<int>(), *opt.k);
    }
    emit_json(make_report("analyze", std::nullopt, &m, Json::array({item})));
    return kExitOk;
  }

  std::cout << m.field().name() << ", rank " << pr.rank << ", " << m.size()
            << " elements, girth " << pr.girth.to_string() << ", paving index "
            << pr.paving_index << '\n';
  if (opt.k) {
    std::cout << "is " << *opt.k << "-paving: " << (is_k_paving(m, *opt.k) ? "yes" : "no")
              << "\n";
  }
  std::cout << '\n';
  std::vector<std::string> header = {"element", "local girth", "looseness"};
  if (opt.k) header.push_back(std::to_string(*opt.k) + "-loose");
  header.push_back("witness");
  Table t(header);
  for (const auto& e : pr.per_element) {
    std::vector<std::string> row = {std::to_string(e.element), e.local_girth.to_string(),
                                    std::to_string(e.looseness_index)};
    if (opt.k) row.push_back(is_k_loose(m, e.element, *opt.k) ? "yes" : "no");
    row.push_back(e.coloop ? "coloop" : join(e.witness));
    t.add(std::move(row));
  }
  t.print(std::cout);
  return kExitOk;
}

// ---------------------------------------------------------------- construct

struct ConstructOptions {
  std::string kind;
  std::optional<int> rank;
  std::optional<int> k;
  std::optional<int> m;
  std::string output;
};

int run_construct(const ConstructOptions& opt) {
  auto need = [](const std::optional<int>& v, const char* flag, const std::string& kind) {
    if (!v) throw UsageError(kind + " needs " + flag);
    return *v;
  };
  std::vector<std::string> comments;
  std::optional<MatroidRep> m;
  if (opt.kind == "extremal") {
    const int r = need(opt.rank, "--rank", opt.kind);
    const int k = need(opt.k, "--k", opt.kind);
    auto ext = extremal_k_loose(r, k);
    comments.push_back("construct extremal r=" + std::to_string(r) + " k=" + std::to_string(k));
    comments.push_back("loose-element " + std::to_string(ext.loose_element));
    m = std::move(ext.matroid);
  } else if (opt.kind == "reed-muller") {
    const int deg = need(opt.m, "--m", opt.kind);
    m = reed_muller_r1(deg);
    comments.push_back("construct reed-muller m=" + std::to_string(deg));
  } else if (opt.kind == "circuit") {
    const int r = need(opt.rank, "--rank", opt.kind);
    m = circuit_matroid(r);
    comments.push_back("construct circuit r=" + std::to_string(r));
  } else {
    throw UsageError("unknown construction '" + opt.kind + "'");
  }

  if (opt.output.empty() || opt.output == "-") {
    std::cout << serialize_matrix(*m, comments);
  } else {
    write_matrix_file(opt.output, *m, comments);
    std::cerr << "wrote " << m->rows() << "x" << m->size() << " matrix to " << opt.output << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string file;
  std::string theorem = "all";
  std::optional<int> k;
  bool json = false;
};

int run_bounds(const BoundsOptions& opt) {
  const MatrixFile mf = load(opt.file);
  const MatroidRep& m = mf.matroid;

  std::vector<TheoremId> theorems;
  if (opt.theorem == "all") {
    for (TheoremId id : all_theorems()) {
      if (auto f = theorem_field(id); f && *f != m.field().order()) continue;
      if (theorem_takes_k(id) && !opt.k) continue;
      theorems.push_back(id);
    }
  } else {
    auto id = parse_theorem(opt.theorem);
    if (!id) throw UsageError("unknown theorem '" + opt.theorem + "'");
    theorems.push_back(*id);
  }

  const BoundEvaluator evaluator(m);
  std::vector<BoundEvaluation> evals;
  for (TheoremId id : theorems) {
    // With every theorem selected, fixed-k theorems ignore --k.
    const bool pass_k = opt.theorem != "all" || theorem_takes_k(id);
    evals.push_back(evaluator.evaluate(id, pass_k ? opt.k : std::nullopt));
  }
  const bool violated = std::any_of(evals.begin(), evals.end(), [](const BoundEvaluation& e) {
    return e.verdict == Verdict::violation;
  });

  if (opt.json) {
    Json results = Json::array();
    for (const auto& e : evals) results.push_back(to_json(e));
    emit_json(make_report("bounds", std::nullopt, &m, std::move(results)));
    return violated ? kExitFailure : kExitOk;
  }

  Table t({"theorem", "k", "quantity", "observed", "bound", "verdict"});
  for (const auto& e : evals) {
    t.add({std::string(to_string(e.theorem)), e.k ? std::to_string(*e.k) : "-",
           std::string(to_string(e.quantity)), std::to_string(e.observed_value),
           std::to_string(e.bound_value), std::string(to_string(e.verdict))});
  }
  t.print(std::cout);
  for (const auto& e : evals) {
    std::cout << '\n' << to_string(e.theorem) << ":\n";
    for (const auto& h : e.hypotheses) {
      std::cout << "  [" << (h.passed ? "ok" : "no") << "] " << h.name
                << (h.detail.empty() ? "" : " (" + h.detail + ")") << '\n';
    }
    for (const auto& h : e.escapes)
      std::cout << "  escape " << h.name << ": " << (h.passed ? "applies" : "no") << '\n';
    for (const auto& n : e.notes) std::cout << "  note: " << n << '\n';
  }
  return violated ? kExitFailure : kExitOk;
}

// ------------------------------------------------------------------- search

struct SearchOptions {
  int rank = 0;
  int k = 0;
  int q = 2;
  std::string mode = "max-size";
  std::optional<int> threads;
  std::uint64_t budget = SearchConfig{}.node_budget;
  std::optional<int> target;
  bool exclude_circuit = false;
  bool no_seed = false;
  bool timing = false;
  bool json = false;
};

int run_search_cmd(const SearchOptions& opt) {
  SearchConfig cfg;
  cfg.q = opt.q;
  cfg.r = opt.rank;
  cfg.k = opt.k;
  auto mode = parse_search_mode(opt.mode);
  if (!mode) throw UsageError("unknown search mode '" + opt.mode + "'");
  cfg.mode = *mode;
  cfg.workers = opt.threads ? *opt.threads : default_threads();
  cfg.node_budget = opt.budget;
  cfg.size_target = opt.target;
  cfg.exclude_circuit = opt.exclude_circuit;
  cfg.seed = opt.no_seed ? SeedColumns::none : SeedColumns::identity;
  cfg.validate();

  const SearchResult res = run_search(cfg);
  if (opt.json) {
    emit_json(make_report("search", std::nullopt, nullptr,
                          Json::array({to_json(res, opt.timing)})));
    return kExitOk;
  }

  Table t({"field", "rank", "k", "mode", "best size", "exhausted", "nodes", "status"});
  t.add({"GF(" + std::to_string(cfg.q) + ")", std::to_string(cfg.r), std::to_string(cfg.k),
         std::string(to_string(cfg.mode)), std::to_string(res.best_size),
         res.exhausted ? "yes" : "no (bound not certified)", std::to_string(res.nodes_visited),
         res.status ? std::string(to_string(*res.status)) : "-"});
  t.print(std::cout);
  if (opt.timing) {
    std::cout << "wall time "
              << std::chrono::duration<double, std::milli>(res.wall_time).count() << " ms\n";
  }
  if (cfg.mode == SearchMode::enumerate)
    std::cout << res.certificates.size() << " certificates\n";
  if (res.certificate) std::cout << "\ncertificate:\n" << serialize_matrix(*res.certificate);
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool json = false;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<std::string_view> names;
  if (opt.suite == "all") {
    names.assign(suite_names().begin(), suite_names().end());
  } else {
    names.push_back(opt.suite);
  }
  std::vector<SuiteResult> results;
  for (auto name : names) results.push_back(run_suite(name, opt.seed));
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const SuiteResult& s) { return s.passed(); });

  if (opt.json) {
    Json arr = Json::array();
    for (const auto& s : results) arr.push_back(s.to_json());
    emit_json(make_report("verify", opt.seed, nullptr, std::move(arr)));
    return ok ? kExitOk : kExitFailure;
  }

  for (const auto& s : results) {
    std::cout << "suite " << s.suite << " (seed " << s.seed << "): "
              << (s.passed() ? "PASS" : "FAIL") << '\n';
    Table t({"result", "check", "detail"});
    for (const auto& c : s.checks) t.add({c.passed ? "pass" : "FAIL", c.name, c.detail});
    t.print(std::cout);
    std::cout << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Girth, looseness and paving analysis of matroids over small finite fields"};
  app.set_version_flag("--version", std::string(kpave::tool_version()));
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* an = app.add_subcommand("analyze", "Girth, local girths and paving index of a matrix file");
  an->add_option("file", analyze.file, "Matrix file ('-' for stdin)")->required();
  an->add_option("--element", analyze.element, "Report one element only");
  an->add_option("--k", analyze.k, "Also decide k-looseness / k-paving");
  an->add_flag("--json", analyze.json, "Emit a JSON report");

  ConstructOptions construct;
  auto* co = app.add_subcommand("construct", "Write a standard construction as a matrix file");
  co->add_option("kind", construct.kind, "extremal | reed-muller | circuit")
      ->required()
      ->check(CLI::IsMember({"extremal", "reed-muller", "circuit"}));
  co->add_option("--rank", construct.rank, "Rank (extremal, circuit)");
  co->add_option("--k", construct.k, "Looseness (extremal)");
  co->add_option("--m", construct.m, "Number of variables (reed-muller)");
  co->add_option("-o,--output", construct.output, "Output path (default stdout)");

  BoundsOptions bounds;
  auto* bo = app.add_subcommand("bounds", "Evaluate size and rank bounds on a matrix file");
  bo->add_option("file", bounds.file, "Matrix file ('-' for stdin)")->required();
  bo->add_option("--theorem", bounds.theorem,
                 "T1.1 T1.2 C1.3 T1.4 C1.6 T3.1 C3.4 C3.5, or all (default)");
  bo->add_option("--k", bounds.k, "Looseness / paving parameter");
  bo->add_flag("--json", bounds.json, "Emit a JSON report");

  SearchOptions search;
  auto* se = app.add_subcommand("search", "Search for large k-paving matroids");
  se->add_option("--rank", search.rank, "Rank r")->required();
  se->add_option("--k", search.k, "Paving parameter k")->required();
  se->add_option("--q", search.q, "Field order")->capture_default_str();
  se->add_option("--mode", search.mode, "max-size | nonexistence | enumerate")
      ->capture_default_str();
  se->add_option("--threads", search.threads, "Worker threads (default $KPAVE_THREADS or 1)");
  se->add_option("--budget", search.budget, "Node budget")->capture_default_str();
  se->add_option("--target", search.target, "Size target (nonexistence, enumerate)");
  se->add_flag("--exclude-circuit", search.exclude_circuit,
               "max-size: do not count the circuit U(r, r+1)");
  se->add_flag("--no-identity-seed", search.no_seed, "Do not fix a basis as the first columns");
  se->add_flag("--timing", search.timing, "Report wall time");
  se->add_flag("--json", search.json, "Emit a JSON report");

  VerifyOptions verify;
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("--suite", verify.suite,
                 "construction | bounds | oracle | paving-rank | table-1-6 | all")
      ->capture_default_str();
  ve->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  ve->add_flag("--json", verify.json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (an->parsed()) return run_analyze(analyze);
    if (co->parsed()) return run_construct(construct);
    if (bo->parsed()) return run_bounds(bounds);
    if (se->parsed()) return run_search_cmd(search);
    if (ve->parsed()) return run_verify(verify);
  } catch (const kpave::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
