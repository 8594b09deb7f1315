#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

#include "dynlo/bitstring.hpp"

namespace dynlo {

class RandomStream;

using Fitness = int;

/// Fitness of an undefined memory slot.
inline constexpr Fitness kUndefinedFitness = std::numeric_limits<Fitness>::min();

/// Length of the longest prefix on which x agrees with z.
Fitness leading_ones(const BitString& x, const BitString& z);

/// Dynamic LeadingOnes: LO_z whose target z has k random bits inverted at
/// the end of every period of tau iterations. The period clock belongs to
/// the caller; this class only evaluates, counts and perturbs.
class DynamicLOProblem {
 public:
  DynamicLOProblem(BitString target, std::size_t k, std::int64_t tau);

  /// Problem with a uniformly random initial target.
  static DynamicLOProblem with_random_target(std::size_t n, std::size_t k,
                                             std::int64_t tau,
                                             RandomStream& rng);

  std::size_t n() const noexcept { return target_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::int64_t tau() const noexcept { return tau_; }
  const BitString& target() const noexcept { return target_; }
  std::int64_t evaluations() const noexcept { return evaluations_; }
  std::int64_t perturbations() const noexcept { return perturbations_; }

  /// Budget-counted fitness call.
  Fitness evaluate(const BitString& x) {
    const Fitness f = leading_ones(x, target_);
    ++evaluations_;
    return f;
  }

  /// Fitness refresh that is not charged to the budget.
  Fitness reevaluate(const BitString& x) const {
    return leading_ones(x, target_);
  }

  /// k-bit inversion at uniformly chosen positions. Returns (old, new).
  std::pair<BitString, BitString> perturb(RandomStream& rng);

  /// Inversion at explicit (1-based, distinct) positions; the random
  /// variant delegates here. Requires exactly k positions.
  std::pair<BitString, BitString> perturb_at(
      std::span<const std::size_t> positions);

 private:
  BitString target_;
  std::size_t k_;
  std::int64_t tau_;
  std::int64_t evaluations_ = 0;
  std::int64_t perturbations_ = 0;
};

}  // namespace dynlo
