#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace dynlo {

/// Deterministic pseudorandom stream. Identical seed gives an identical
/// sequence of draws for a given build (the distributions come from the
/// standard library, whose algorithms are implementation-defined).
///
/// Single owner: not safe for concurrent use.
class RandomStream {
 public:
  using Engine = std::mt19937_64;
  static constexpr std::string_view kGeneratorName = "std::mt19937_64";

  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// 64 uniformly random bits.
  std::uint64_t next_word() { return engine_(); }

  /// Uniform integer in the closed range [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  /// Uniform real in [0, 1).
  double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  /// Binomial(trials, p) sample.
  int binomial(int trials, double p) {
    return std::binomial_distribution<int>(trials, p)(engine_);
  }

  Engine& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  Engine engine_;
};

/// splitmix64 finalizer; the published 64-bit mixer used for seed splitting.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of run `run_index` under `master_seed`. Depends only on the pair,
/// never on execution order.
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed,
                                        std::uint64_t run_index) noexcept {
  return splitmix64(master_seed ^ splitmix64(run_index));
}

inline constexpr std::string_view kSeedMixerName =
    "splitmix64(master ^ splitmix64(run_index))";

/// Uniformly random k-subset of [1..n], returned sorted ascending.
/// Throws ContractViolation if k > n.
std::vector<std::size_t> random_k_subset(std::size_t n, std::size_t k,
                                         RandomStream& rng);

}  // namespace dynlo
