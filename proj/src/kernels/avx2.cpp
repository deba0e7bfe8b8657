#include "cellembed/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <array>
#include <cstring>

namespace cellembed::kernels::detail {
namespace {

constexpr std::size_t kLanes = 32;
// Words are copied into a zero-initialised buffer padded to a whole number of
// vectors (plus one so that unaligned loads at i+1 stay in bounds).
constexpr std::size_t kPadded = 288;

std::size_t count_inversions_avx2(std::span<const std::uint8_t> w) {
  alignas(32) std::array<std::uint8_t, kPadded> buf;
  buf.fill(0xFF);
  std::memcpy(buf.data(), w.data(), w.size());
  const std::size_t n = w.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // w[j] < w[i]  <=>  min(w[j], w[i]-1) == w[j]; padding 0xFF never matches.
    const __m256i bound = _mm256_set1_epi8(static_cast<char>(w[i] - 1));
    for (std::size_t j = i + 1; j < n; j += kLanes) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf.data() + j));
      const __m256i lt = _mm256_cmpeq_epi8(_mm256_min_epu8(v, bound), v);
      auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(lt));
      const std::size_t remaining = n - j;
      if (remaining < kLanes) mask &= (1u << remaining) - 1u;
      count += static_cast<std::size_t>(__builtin_popcount(mask));
    }
  }
  return count;
}

bool rank_dominates_avx2(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  const std::size_t n = x.size();
  const std::size_t chunks = (n + kLanes - 1) / kLanes;
  // Lane q of chunk c holds the running counts for threshold c*32 + q + 1.
  // Counts never exceed n <= 255 so bytes suffice. Lanes past n hold p in
  // both tables and never register a violation.
  __m256i cx[8];
  __m256i cy[8];
  __m256i thresholds[8];
  for (std::size_t c = 0; c < chunks; ++c) {
    cx[c] = _mm256_setzero_si256();
    cy[c] = _mm256_setzero_si256();
    alignas(32) std::array<std::uint8_t, kLanes> t;
    for (std::size_t q = 0; q < kLanes; ++q) {
      const std::size_t value = c * kLanes + q + 1;
      t[q] = static_cast<std::uint8_t>(value > 255 ? 255 : value);
    }
    thresholds[c] = _mm256_load_si256(reinterpret_cast<const __m256i*>(t.data()));
  }
  for (std::size_t p = 0; p < n; ++p) {
    const __m256i xp = _mm256_set1_epi8(static_cast<char>(x[p]));
    const __m256i yp = _mm256_set1_epi8(static_cast<char>(y[p]));
    __m256i violation = _mm256_setzero_si256();
    for (std::size_t c = 0; c < chunks; ++c) {
      // threshold >= x[p]  <=>  max(threshold, x[p]) == threshold; the
      // comparison mask is -1 per hit so subtracting it increments.
      const __m256i hx = _mm256_cmpeq_epi8(_mm256_max_epu8(thresholds[c], xp), thresholds[c]);
      const __m256i hy = _mm256_cmpeq_epi8(_mm256_max_epu8(thresholds[c], yp), thresholds[c]);
      cx[c] = _mm256_sub_epi8(cx[c], hx);
      cy[c] = _mm256_sub_epi8(cy[c], hy);
      // cy > cx  <=>  max(cx, cy) != cx
      const __m256i ok = _mm256_cmpeq_epi8(_mm256_max_epu8(cx[c], cy[c]), cx[c]);
      violation = _mm256_or_si256(violation, _mm256_xor_si256(ok, _mm256_set1_epi8(-1)));
    }
    if (!_mm256_testz_si256(violation, violation)) return false;
  }
  return true;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{Backend::Avx2, &count_inversions_avx2, &rank_dominates_avx2};
  return &table;
}

}  // namespace cellembed::kernels::detail

#else

namespace cellembed::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace cellembed::kernels::detail

#endif
