#pragma once

#include <cstddef>

#include "dynlo/bitstring.hpp"

namespace dynlo {

class RandomStream;

struct MutationParams {
  std::size_t n = 0;
  double p = 0.0;

  /// Standard rate p = 1/n.
  static MutationParams standard(std::size_t n) {
    return MutationParams{n, 1.0 / static_cast<double>(n)};
  }
};

/// Throws ContractViolation unless n >= 1 and 0 < p < 1.
void validate(const MutationParams& params);

/// Mutation strength from Bin(n, p) with the mass at 0 moved to 1.
std::size_t sample_strength(const MutationParams& params, RandomStream& rng);

/// Flip exactly `ell` uniformly chosen distinct positions of x.
BitString mut_ell(const BitString& x, std::size_t ell, RandomStream& rng);

/// Shift mutation: mut_ell(x, sample_strength(params)). The offspring always
/// differs from the parent.
BitString shift_mutation(const BitString& x, const MutationParams& params,
                         RandomStream& rng);

}  // namespace dynlo
