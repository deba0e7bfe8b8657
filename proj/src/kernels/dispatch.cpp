#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cellembed/kernels.hpp"

namespace cellembed::kernels {
namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* lookup(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &scalar_table();
    case Backend::Avx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Backend::Neon:
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("CELLEMBED_KERNEL")) {
    const std::string name(env);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (name == backend_name(b)) {
        if (const KernelTable* t = lookup(b)) return t;
        throw std::runtime_error("CELLEMBED_KERNEL=" + name + " is not available on this machine");
      }
    }
    throw std::runtime_error("unknown CELLEMBED_KERNEL value: " + name);
  }
  const auto backends = available_backends();
  return lookup(backends.back());
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  for (Backend b : {Backend::Avx2, Backend::Neon}) {
    if (lookup(b) != nullptr) out.push_back(b);
  }
  return out;
}

const KernelTable& table_for(Backend b) {
  const KernelTable* t = lookup(b);
  if (t == nullptr) {
    throw std::runtime_error("kernel backend not available: " + std::string(backend_name(b)));
  }
  return *t;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void set_active(Backend b) { current().store(&table_for(b), std::memory_order_release); }

}  // namespace cellembed::kernels
