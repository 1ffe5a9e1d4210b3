#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "kpave/bounds.hpp"
#include "kpave/loose.hpp"
#include "kpave/matroid.hpp"
#include "kpave/search.hpp"

namespace kpave {

using Json = nlohmann::ordered_json;

std::string_view tool_version();

/// Report envelope shared by every command:
/// {tool_version, command, seed?, field, matroid, results}.
/// `field` and `matroid` are null when the report is not about one matroid.
Json make_report(std::string_view command, std::optional<std::uint64_t> seed,
                 const MatroidRep* matroid, Json results);

Json field_json(const FieldSpec& field);
Json girth_json(const Girth& g);
Json to_json(const LooseReport& report);
Json to_json(const PavingReport& report);
Json to_json(const BoundEvaluation& eval);
/// Timing is left out unless asked for, so reports stay byte-stable.
Json to_json(const SearchResult& result, bool include_timing);

}  // namespace kpave
