#include "cellembed/config.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cellembed {
namespace {

void override_from_env(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  }
  slot = value;
}

}  // namespace

void Guards::validate() const {
  if (interval_max == 0 || iso_max == 0 || ideal_max == 0) {
    throw std::invalid_argument("guards must be positive");
  }
}

Guards Guards::with_env_overrides() const {
  Guards g = *this;
  override_from_env("GUARD_INTERVAL_MAX", g.interval_max);
  override_from_env("GUARD_ISO_MAX", g.iso_max);
  override_from_env("GUARD_IDEAL_MAX", g.ideal_max);
  g.validate();
  return g;
}

}  // namespace cellembed
