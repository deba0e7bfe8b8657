#pragma once

#include "cellembed/config.hpp"
#include "cellembed/report.hpp"

namespace cellembed {

struct SelftestOptions {
  Config config;
  /// Replaces one golden expected value with a wrong one; the report must
  /// then show exactly that check failing.
  bool tamper = false;
};

/// Golden cases and the exhaustive S_4 sweep, sorted by check name. With
/// config.stretch, also attempts the S_10 mu = 4 reproduction; a guard
/// overflow there is recorded as skipped.
Report selftest(const SelftestOptions& options);

}  // namespace cellembed
