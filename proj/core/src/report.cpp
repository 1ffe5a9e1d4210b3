#include "kpave/report.hpp"

#include "kpave/matrix_io.hpp"

#ifndef KPAVE_VERSION
#define KPAVE_VERSION "0.0.0"
#endif

namespace kpave {

std::string_view tool_version() { return KPAVE_VERSION; }

Json field_json(const FieldSpec& field) {
  return Json{{"q", field.order()}, {"p", field.characteristic()}, {"m", field.degree()}};
}

Json make_report(std::string_view command, std::optional<std::uint64_t> seed,
                 const MatroidRep* matroid, Json results) {
  Json out;
  out["tool_version"] = tool_version();
  out["command"] = command;
  if (seed) out["seed"] = *seed;
  if (matroid) {
    out["field"] = field_json(matroid->field());
    out["matroid"] = Json{{"rank", matroid->rank()}, {"n", matroid->size()}};
  } else {
    out["field"] = nullptr;
    out["matroid"] = nullptr;
  }
  out["results"] = std::move(results);
  return out;
}

Json girth_json(const Girth& g) {
  if (g.is_infinite()) return "inf";
  return g.value();
}

Json to_json(const LooseReport& report) {
  Json out;
  out["element"] = report.element;
  out["local_girth"] = girth_json(report.local_girth);
  out["looseness_index"] = report.looseness_index;
  out["coloop"] = report.coloop;
  out["witness"] = report.coloop ? Json(nullptr) : Json(report.witness);
  return out;
}

Json to_json(const PavingReport& report) {
  Json out;
  out["rank"] = report.rank;
  out["girth"] = girth_json(report.girth);
  out["paving_index"] = report.paving_index;
  Json elems = Json::array();
  for (const auto& e : report.per_element) elems.push_back(to_json(e));
  out["per_element"] = std::move(elems);
  return out;
}

Json to_json(const BoundEvaluation& eval) {
  auto checks = [](const std::vector<HypothesisCheck>& list) {
    Json arr = Json::array();
    for (const auto& c : list) {
      Json item{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      arr.push_back(std::move(item));
    }
    return arr;
  };
  Json out;
  out["theorem"] = to_string(eval.theorem);
  Json params{{"r", eval.r}, {"q", eval.q}};
  params["k"] = eval.k ? Json(*eval.k) : Json(nullptr);
  out["params"] = std::move(params);
  out["hypotheses"] = checks(eval.hypotheses);
  out["escapes"] = checks(eval.escapes);
  out["quantity"] = to_string(eval.quantity);
  out["bound_value"] = eval.bound_value;
  out["observed_value"] = eval.observed_value;
  out["verdict"] = to_string(eval.verdict);
  out["notes"] = eval.notes;
  out["certificate"] =
      eval.certificate ? Json(serialize_matrix(*eval.certificate)) : Json(nullptr);
  return out;
}

Json to_json(const SearchResult& result, bool include_timing) {
  const SearchConfig& c = result.config;
  Json config;
  config["q"] = c.q;
  config["r"] = c.r;
  config["k"] = c.k;
  config["mode"] = to_string(c.mode);
  config["size_target"] = c.size_target ? Json(*c.size_target) : Json(nullptr);
  config["node_budget"] = c.node_budget;
  config["workers"] = c.workers;
  config["seed_columns"] = c.seed == SeedColumns::identity ? "identity" : "none";
  config["exclude_circuit"] = c.exclude_circuit;

  Json out;
  out["config"] = std::move(config);
  out["best_size"] = result.best_size;
  out["certificate"] =
      result.certificate ? Json(serialize_matrix(*result.certificate)) : Json(nullptr);
  if (c.mode == SearchMode::enumerate) out["certificate_count"] = result.certificates.size();
  out["exhausted"] = result.exhausted;
  if (!result.exhausted) out["claim"] = "bound not certified";
  if (result.status) out["status"] = to_string(*result.status);
  out["nodes_visited"] = result.nodes_visited;
  if (include_timing) {
    out["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(result.wall_time).count();
  }
  return out;
}

}  // namespace kpave
