#include "cellembed/kernels.hpp"

#include <array>

namespace cellembed::kernels {
namespace {

std::size_t count_inversions_scalar(std::span<const std::uint8_t> w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      count += w[j] < w[i];
    }
  }
  return count;
}

bool rank_dominates_scalar(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  const std::size_t n = x.size();
  // cx[q] = #{i <= p : x(i) <= q}, updated one row p at a time.
  std::array<int, 257> cx{};
  std::array<int, 257> cy{};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = x[p]; q <= n; ++q) ++cx[q];
    for (std::size_t q = y[p]; q <= n; ++q) ++cy[q];
    for (std::size_t q = 1; q <= n; ++q) {
      if (cx[q] < cy[q]) return false;
    }
  }
  return true;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Backend::Scalar, &count_inversions_scalar, &rank_dominates_scalar};
  return table;
}

}  // namespace cellembed::kernels
