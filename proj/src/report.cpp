#include "cellembed/report.hpp"

#include <algorithm>

namespace cellembed {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back(Check{std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail,
                          std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks_.push_back(Check{std::move(name), CheckStatus::Skipped, std::move(detail)});
}

bool Report::ok() const {
  return std::none_of(checks_.begin(), checks_.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Fail) out.push_back(c.name);
  }
  return out;
}

void Report::sort_by_name() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

}  // namespace cellembed
