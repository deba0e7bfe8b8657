#pragma once

#include <cstddef>
#include <stdexcept>

#include "cellembed/permutation.hpp"

namespace cellembed {

/// Size limits for the exhaustive parts of verification. These are
/// configuration, not constants: larger machines can raise them.
struct Guards {
  std::size_t interval_max = 100'000;  ///< elements in one Bruhat interval
  std::size_t iso_max = 2'000;         ///< elements per side in isomorphism search
  std::size_t ideal_max = 500'000;     ///< elements in one lower order ideal (KL)

  /// Throws std::invalid_argument unless every guard is positive.
  void validate() const;
  /// Applies GUARD_INTERVAL_MAX, GUARD_ISO_MAX, GUARD_IDEAL_MAX if set.
  Guards with_env_overrides() const;
};

/// Raised when a computation would exceed a configured guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Json };

struct Config {
  Base base = Base::One;
  Guards guards;
  OutputFormat output = OutputFormat::Text;
  bool stretch = false;
};

}  // namespace cellembed
