#include "cellembed/trace_json.hpp"

#include <stdexcept>
#include <string>

namespace cellembed {
namespace {

std::string base_name(Base b) { return b == Base::Zero ? "zero" : "one"; }

Base parse_base(const std::string& s) {
  if (s == "zero") return Base::Zero;
  if (s == "one") return Base::One;
  throw std::invalid_argument("trace: base must be \"zero\" or \"one\"");
}

}  // namespace

nlohmann::json tableau_to_json(const StandardTableau& t) { return t.rows(); }

StandardTableau tableau_from_json(const nlohmann::json& j) {
  return StandardTableau(j.get<StandardTableau::Rows>());
}

nlohmann::json checks_to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : report.checks()) {
    if (c.status != CheckStatus::Skipped) checks[c.name] = c.status == CheckStatus::Pass;
  }
  return checks;
}

nlohmann::json trace_to_json(const EmbeddingTrace& trace, Base base, const Report& checks) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"i", s.index},
                     {"k", s.k},
                     {"t", s.t},
                     {"n_in", s.n_in()},
                     {"x_in", format(s.x_in, base)},
                     {"y_in", format(s.y_in, base)},
                     {"x_out", format(s.x_out, base)},
                     {"y_out", format(s.y_out, base)},
                     {"P_x", tableau_to_json(s.p_x)},
                     {"P_y", tableau_to_json(s.p_y)}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& c : checks.checks()) {
    if (c.status == CheckStatus::Skipped) skipped.push_back(c.name);
  }
  return {{"version", kTraceSchemaVersion},
          {"x", format(trace.x, base)},
          {"y", format(trace.y, base)},
          {"base", base_name(base)},
          {"steps", std::move(steps)},
          {"v", format(trace.v, base)},
          {"w", format(trace.w, base)},
          {"N", trace.big_n()},
          {"checks", checks_to_json(checks)},
          {"skipped", std::move(skipped)}};
}

ParsedTrace trace_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kTraceSchemaVersion) {
      throw std::invalid_argument("trace: unsupported version");
    }
    const Base base = parse_base(j.at("base").get<std::string>());
    auto perm = [base](const nlohmann::json& field) {
      return parse(field.get<std::string>(), base);
    };
    std::vector<EmbeddingStep> steps;
    for (const auto& s : j.at("steps")) {
      steps.push_back(EmbeddingStep{.index = s.at("i").get<std::size_t>(),
                                    .k = s.at("k").get<int>(),
                                    .t = s.at("t").get<int>(),
                                    .x_in = perm(s.at("x_in")),
                                    .y_in = perm(s.at("y_in")),
                                    .x_out = perm(s.at("x_out")),
                                    .y_out = perm(s.at("y_out")),
                                    .p_x = tableau_from_json(s.at("P_x")),
                                    .p_y = tableau_from_json(s.at("P_y"))});
      if (s.at("n_in").get<std::size_t>() != steps.back().n_in()) {
        throw std::invalid_argument("trace: n_in disagrees with x_in");
      }
    }
    EmbeddingTrace trace{.x = perm(j.at("x")),
                         .y = perm(j.at("y")),
                         .steps = std::move(steps),
                         .v = perm(j.at("v")),
                         .w = perm(j.at("w"))};
    if (j.at("N").get<std::size_t>() != trace.big_n()) {
      throw std::invalid_argument("trace: N disagrees with v");
    }
    return ParsedTrace{std::move(trace), base};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("trace: ") + e.what());
  }
}

}  // namespace cellembed
