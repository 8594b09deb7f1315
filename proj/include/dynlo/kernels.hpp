#pragma once

// Data-parallel inner loops shared by the bit-string and statistics code.
//
// Every kernel has a portable scalar reference implementation. Vectorized
// variants (AVX2 on x86-64, NEON on AArch64) must produce bit-identical
// results; `active()` picks the best variant the running CPU supports.
// Setting DYNLO_KERNELS=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dynlo::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Number of differing bits between two equal-length word arrays.
using HammingFn = std::size_t (*)(const Word* a, const Word* b,
                                  std::size_t words) noexcept;

/// Index (0-based, LSB-first within each word) of the first bit where the
/// arrays differ, or `words * 64` when they are identical.
using FirstMismatchFn = std::size_t (*)(const Word* a, const Word* b,
                                        std::size_t words) noexcept;

/// sum[i] += v[i]; sumsq[i] += v[i]^2 for all i < count.
using AccumulateFn = void (*)(const std::int32_t* values, double* sum,
                              double* sumsq, std::size_t count) noexcept;

struct KernelTable {
  std::string_view name;
  HammingFn hamming;
  FirstMismatchFn first_mismatch;
  AccumulateFn accumulate_moments;
};

namespace scalar {
std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept;
std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept;
void accumulate_moments(const std::int32_t* values, double* sum, double* sumsq,
                        std::size_t count) noexcept;
}  // namespace scalar

#if defined(DYNLO_HAVE_AVX2)
namespace avx2 {
std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept;
std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept;
void accumulate_moments(const std::int32_t* values, double* sum, double* sumsq,
                        std::size_t count) noexcept;
}  // namespace avx2
#endif

#if defined(DYNLO_HAVE_NEON)
namespace neon {
std::size_t hamming(const Word* a, const Word* b, std::size_t words) noexcept;
std::size_t first_mismatch(const Word* a, const Word* b,
                           std::size_t words) noexcept;
void accumulate_moments(const std::int32_t* values, double* sum, double* sumsq,
                        std::size_t count) noexcept;
}  // namespace neon
#endif

const KernelTable& scalar_table() noexcept;

/// Tables compiled into this build and supported by the running CPU,
/// scalar first.
std::span<const KernelTable* const> available_tables() noexcept;

/// The dispatched table (selected once, on first use).
const KernelTable& active() noexcept;

}  // namespace dynlo::kernels
