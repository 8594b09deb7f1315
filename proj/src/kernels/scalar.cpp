#include "dynlo/kernels.hpp"

#include <bit>

namespace dynlo::kernels::scalar {

std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    count += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  }
  return count;
}

std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept {
  for (std::size_t i = 0; i < words; ++i) {
    const Word diff = a[i] ^ b[i];
    if (diff != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    }
  }
  return words * kWordBits;
}

void accumulate_moments(const std::int32_t* values, double* sum, double* sumsq,
                        std::size_t count) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    const double v = static_cast<double>(values[i]);
    sum[i] += v;
    sumsq[i] += v * v;
  }
}

}  // namespace dynlo::kernels::scalar
