#include "dynlo/problem.hpp"

#include <algorithm>
#include <string>

#include "dynlo/error.hpp"
#include "dynlo/random.hpp"

namespace dynlo {

Fitness leading_ones(const BitString& x, const BitString& z) {
  if (x.size() != z.size()) {
    throw ContractViolation("leading_ones: length mismatch (" +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(z.size()) + ")");
  }
  const auto wx = x.words();
  // Padding bits are zero in both, so identical strings report >= n.
  const std::size_t first =
      kernels::active().first_mismatch(wx.data(), z.words().data(), wx.size());
  return static_cast<Fitness>(std::min(first, x.size()));
}

DynamicLOProblem::DynamicLOProblem(BitString target, std::size_t k,
                                   std::int64_t tau)
    : target_(std::move(target)), k_(k), tau_(tau) {
  if (target_.size() < 1) {
    throw ContractViolation("DynamicLOProblem: n must be >= 1");
  }
  if (k_ < 1 || k_ > target_.size()) {
    throw ContractViolation("DynamicLOProblem: k must lie in [1..n]");
  }
  if (tau_ < 1) throw ContractViolation("DynamicLOProblem: tau must be >= 1");
}

DynamicLOProblem DynamicLOProblem::with_random_target(std::size_t n,
                                                      std::size_t k,
                                                      std::int64_t tau,
                                                      RandomStream& rng) {
  return DynamicLOProblem(random_bitstring(n, rng), k, tau);
}

std::pair<BitString, BitString> DynamicLOProblem::perturb(RandomStream& rng) {
  const auto positions = random_k_subset(n(), k_, rng);
  return perturb_at(positions);
}

std::pair<BitString, BitString> DynamicLOProblem::perturb_at(
    std::span<const std::size_t> positions) {
  if (positions.size() != k_) {
    throw ContractViolation("perturb_at: expected " + std::to_string(k_) +
                            " positions, got " +
                            std::to_string(positions.size()));
  }
  BitString next = flip_bits(target_, positions);
  BitString previous = std::exchange(target_, next);
  ++perturbations_;
  return {std::move(previous), std::move(next)};
}

}  // namespace dynlo
