#include "dynlo/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace dynlo::kernels::neon {

std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t diff = vreinterpretq_u8_u64(
        veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    acc = vpadalq_u32(acc, vpaddlq_u16(vpaddlq_u8(vcntq_u8(diff))));
  }
  std::size_t count = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) {
    count += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  }
  return count;
}

std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t diff = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    const Word lo = vgetq_lane_u64(diff, 0);
    const Word hi = vgetq_lane_u64(diff, 1);
    if (lo != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(lo));
    }
    if (hi != 0) {
      return (i + 1) * kWordBits +
             static_cast<std::size_t>(std::countr_zero(hi));
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
  for (; i + 2 <= count; i += 2) {
    const float64x2_t v = vcvtq_f64_s64(vmovl_s32(vld1_s32(values + i)));
    vst1q_f64(sum + i, vaddq_f64(vld1q_f64(sum + i), v));
    vst1q_f64(sumsq + i, vaddq_f64(vld1q_f64(sumsq + i), vmulq_f64(v, v)));
  }
  for (; i < count; ++i) {
    const double v = static_cast<double>(values[i]);
    sum[i] += v;
    sumsq[i] += v * v;
  }
}

}  // namespace dynlo::kernels::neon
