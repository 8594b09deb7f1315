#include "dynlo/mutation.hpp"

#include <string>

#include "dynlo/error.hpp"
#include "dynlo/random.hpp"

namespace dynlo {

void validate(const MutationParams& params) {
  if (params.n < 1) throw ContractViolation("MutationParams: n must be >= 1");
  if (!(params.p > 0.0 && params.p < 1.0)) {
    throw ContractViolation("MutationParams: p must lie in (0,1), got " +
                            std::to_string(params.p));
  }
}

std::size_t sample_strength(const MutationParams& params, RandomStream& rng) {
  const int drawn = rng.binomial(static_cast<int>(params.n), params.p);
  return drawn == 0 ? 1 : static_cast<std::size_t>(drawn);
}

BitString mut_ell(const BitString& x, std::size_t ell, RandomStream& rng) {
  if (ell < 1 || ell > x.size()) {
    throw ContractViolation("mut_ell: strength " + std::to_string(ell) +
                            " outside [1.." + std::to_string(x.size()) + "]");
  }
  const auto positions = random_k_subset(x.size(), ell, rng);
  return flip_bits(x, positions);
}

BitString shift_mutation(const BitString& x, const MutationParams& params,
                         RandomStream& rng) {
  return mut_ell(x, sample_strength(params, rng), rng);
}

}  // namespace dynlo
