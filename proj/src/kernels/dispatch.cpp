#include <cstdlib>
#include <string_view>
#include <vector>

#include "dynlo/kernels.hpp"

namespace dynlo::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", &scalar::hamming,
                              &scalar::first_mismatch,
                              &scalar::accumulate_moments};

#if defined(DYNLO_HAVE_AVX2)
constexpr KernelTable kAvx2{"avx2", &avx2::hamming, &avx2::first_mismatch,
                            &avx2::accumulate_moments};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}
#endif

#if defined(DYNLO_HAVE_NEON)
// NEON is mandatory on AArch64.
constexpr KernelTable kNeon{"neon", &neon::hamming, &neon::first_mismatch,
                            &neon::accumulate_moments};
#endif

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&kScalar};
#if defined(DYNLO_HAVE_AVX2)
  if (cpu_has_avx2()) tables.push_back(&kAvx2);
#endif
#if defined(DYNLO_HAVE_NEON)
  tables.push_back(&kNeon);
#endif
  return tables;
}

const std::vector<const KernelTable*>& tables() {
  static const std::vector<const KernelTable*> detected = detect();
  return detected;
}

const KernelTable& select() {
  const auto& candidates = tables();
  if (const char* forced = std::getenv("DYNLO_KERNELS")) {
    const std::string_view wanted{forced};
    for (const KernelTable* t : candidates) {
      if (t->name == wanted) return *t;
    }
  }
  return *candidates.back();
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

std::span<const KernelTable* const> available_tables() noexcept {
  return tables();
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace dynlo::kernels
