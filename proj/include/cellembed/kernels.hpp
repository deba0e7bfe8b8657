#pragma once

// Inner loops shared by the Bruhat-order and length computations.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, a vectorized variant (AVX2 on x86-64, NEON on AArch64). The
// variant is chosen once at runtime from CPU features; tests compare every
// available backend against the scalar one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cellembed::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

/// Function table for one backend. Words hold the values 1..n of a
/// permutation (n <= 255).
struct KernelTable {
  Backend backend;
  /// Number of pairs i < j with w[i] > w[j].
  std::size_t (*count_inversions)(std::span<const std::uint8_t> w);
  /// True iff #{i <= p : x[i] <= q} >= #{i <= p : y[i] <= q} for all p, q.
  bool (*rank_dominates)(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);
};

const KernelTable& scalar_table();
/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();
const KernelTable& table_for(Backend b);

/// The table used by the library. Defaults to the widest available backend;
/// CELLEMBED_KERNEL=scalar|avx2|neon in the environment overrides it.
const KernelTable& active();
/// Forces a backend (tests and benchmarks). Throws if unavailable.
void set_active(Backend b);

namespace detail {
// Populated only when the target supports the instruction set.
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace cellembed::kernels
