#pragma once

#include <json.hpp>

#include "cellembed/embed.hpp"
#include "cellembed/report.hpp"

namespace cellembed {

inline constexpr int kTraceSchemaVersion = 1;

nlohmann::json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j);

/// Version-1 trace document. Permutations are written in `base`, compact
/// when they fit. `checks` maps passing/failing check names to booleans;
/// skipped checks are listed under "skipped".
nlohmann::json trace_to_json(const EmbeddingTrace& trace, Base base, const Report& checks);

struct ParsedTrace {
  EmbeddingTrace trace;
  Base base;
};

/// Inverse of trace_to_json (ignores "checks"). Throws std::invalid_argument
/// on a malformed document or unsupported version.
ParsedTrace trace_from_json(const nlohmann::json& j);

nlohmann::json checks_to_json(const Report& report);

}  // namespace cellembed
