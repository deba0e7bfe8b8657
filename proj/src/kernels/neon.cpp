#include "cellembed/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

#include <array>
#include <cstring>

namespace cellembed::kernels::detail {
namespace {

constexpr std::size_t kLanes = 16;
constexpr std::size_t kPadded = 272;

std::size_t count_inversions_neon(std::span<const std::uint8_t> w) {
  std::array<std::uint8_t, kPadded> buf;
  buf.fill(0xFF);
  std::memcpy(buf.data(), w.data(), w.size());
  const std::size_t n = w.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const uint8x16_t pivot = vdupq_n_u8(w[i]);
    for (std::size_t j = i + 1; j < n; j += kLanes) {
      const uint8x16_t v = vld1q_u8(buf.data() + j);
      // 1 per lane where v < pivot; padding 0xFF never qualifies.
      const uint8x16_t lt = vshrq_n_u8(vcltq_u8(v, pivot), 7);
      const std::size_t remaining = n - j;
      if (remaining >= kLanes) {
        count += vaddvq_u8(lt);
      } else {
        std::array<std::uint8_t, kLanes> lanes;
        vst1q_u8(lanes.data(), lt);
        for (std::size_t q = 0; q < remaining; ++q) count += lanes[q];
      }
    }
  }
  return count;
}

bool rank_dominates_neon(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  const std::size_t n = x.size();
  const std::size_t chunks = (n + kLanes - 1) / kLanes;
  std::array<uint8x16_t, 16> cx;
  std::array<uint8x16_t, 16> cy;
  std::array<uint8x16_t, 16> thresholds;
  for (std::size_t c = 0; c < chunks; ++c) {
    cx[c] = vdupq_n_u8(0);
    cy[c] = vdupq_n_u8(0);
    std::array<std::uint8_t, kLanes> t;
    for (std::size_t q = 0; q < kLanes; ++q) {
      const std::size_t value = c * kLanes + q + 1;
      t[q] = static_cast<std::uint8_t>(value > 255 ? 255 : value);
    }
    thresholds[c] = vld1q_u8(t.data());
  }
  for (std::size_t p = 0; p < n; ++p) {
    const uint8x16_t xp = vdupq_n_u8(x[p]);
    const uint8x16_t yp = vdupq_n_u8(y[p]);
    uint8x16_t violation = vdupq_n_u8(0);
    for (std::size_t c = 0; c < chunks; ++c) {
      cx[c] = vsubq_u8(cx[c], vcgeq_u8(thresholds[c], xp));
      cy[c] = vsubq_u8(cy[c], vcgeq_u8(thresholds[c], yp));
      violation = vorrq_u8(violation, vcgtq_u8(cy[c], cx[c]));
    }
    if (vmaxvq_u8(violation) != 0) return false;
  }
  return true;
}

}  // namespace

const KernelTable* neon_table() {
  static const KernelTable table{Backend::Neon, &count_inversions_neon, &rank_dominates_neon};
  return &table;
}

}  // namespace cellembed::kernels::detail

#else

namespace cellembed::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace cellembed::kernels::detail

#endif
