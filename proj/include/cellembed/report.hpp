#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cellembed {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Ordered list of named checks. A report passes when nothing failed;
/// skipped checks (guard limits, non-comparable inputs) do not count.
class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string detail);
  void add(Check check) { checks_.push_back(std::move(check)); }

  const std::vector<Check>& checks() const { return checks_; }
  bool ok() const;
  const Check* find(std::string_view name) const;
  std::vector<std::string> failures() const;
  void sort_by_name();

 private:
  std::vector<Check> checks_;
};

}  // namespace cellembed
