// Compiled with -mavx2; only reached through the dispatcher after a CPUID
// check, so nothing here may be called directly from generic code.

#include "dynlo/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace dynlo::kernels::avx2 {

namespace {

// Per-byte popcount via the nibble lookup (Mula), reduced to four 64-bit
// partial sums by SAD against zero.
inline __m256i popcount_epi64(__m256i v) noexcept {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_xor_si256(va, vb)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t count = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) {
    count += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  }
  return count;
}

std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const int equal_lanes =
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(va, vb)));
    if (equal_lanes != 0xf) {
      const std::size_t lane =
          static_cast<std::size_t>(std::countr_one(static_cast<unsigned>(equal_lanes)));
      const Word diff = a[i + lane] ^ b[i + lane];
      return (i + lane) * kWordBits +
             static_cast<std::size_t>(std::countr_zero(diff));
    }
  }
  for (; i < words; ++i) {
    const Word diff = a[i] ^ b[i];
    if (diff != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    }
  }
  return words * kWordBits;
}

void accumulate_moments(const std::int32_t* values, double* sum, double* sumsq,
                        std::size_t count) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d v = _mm256_cvtepi32_pd(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(values + i)));
    // Separate multiply and add: the scalar reference never contracts to FMA.
    _mm256_storeu_pd(sum + i, _mm256_add_pd(_mm256_loadu_pd(sum + i), v));
    _mm256_storeu_pd(sumsq + i, _mm256_add_pd(_mm256_loadu_pd(sumsq + i),
                                              _mm256_mul_pd(v, v)));
  }
  for (; i < count; ++i) {
    const double v = static_cast<double>(values[i]);
    sum[i] += v;
    sumsq[i] += v * v;
  }
}

}  // namespace dynlo::kernels::avx2
