#pragma once

// Independent reference implementations and self-checks. Nothing here calls
// into the code path it verifies except through the public operation under
// test.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dynlo::oracle {

/// Prefix scan over plain 0/1 vectors.
int leading_ones_loop(std::span<const int> x, std::span<const int> z);

/// Bin(n,p) with the mass at 0 moved to 1, evaluated term by term in long
/// double; element m is P(ell = m) for m in [0..n].
std::vector<double> shifted_binomial_pmf(std::size_t n, double p);

/// Pearson chi-square statistic.
double chi_square(std::span<const double> observed_counts,
                  std::span<const double> expected_counts);

/// Upper critical value of chi-square with `dof` degrees of freedom at
/// significance `alpha`.
double chi_square_critical(std::size_t dof, double alpha);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckResult check_leading_ones_exhaustive(std::uint64_t seed);
CheckResult check_perturbation_hamming(std::uint64_t seed,
                                       std::size_t trials = 10'000);
CheckResult check_strength_pmf(std::size_t n, double p, std::uint64_t seed,
                               std::size_t samples = 1'000'000);
CheckResult check_subset_uniformity(std::uint64_t seed,
                                    std::size_t samples = 100'000);
CheckResult check_kernel_equivalence(std::uint64_t seed);

/// Every registered check, in a fixed order.
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace dynlo::oracle
