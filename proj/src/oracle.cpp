#include "dynlo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstring>
#include <sstream>

#include "dynlo/bitstring.hpp"
#include "dynlo/kernels.hpp"
#include "dynlo/mutation.hpp"
#include "dynlo/problem.hpp"
#include "dynlo/random.hpp"

namespace dynlo::oracle {

int leading_ones_loop(std::span<const int> x, std::span<const int> z) {
  int i = 0;
  while (static_cast<std::size_t>(i) < x.size() &&
         x[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(i)]) {
    ++i;
  }
  return i;
}

std::vector<double> shifted_binomial_pmf(std::size_t n, double p) {
  std::vector<double> pmf(n + 1, 0.0);
  long double coeff = 1.0L;  // C(n, m), built incrementally
  const long double lp = p;
  for (std::size_t m = 0; m <= n; ++m) {
    if (m > 0) coeff = coeff * static_cast<long double>(n - m + 1) / m;
    const long double term = coeff * std::pow(lp, static_cast<long double>(m)) *
                             std::pow(1.0L - lp, static_cast<long double>(n - m));
    pmf[m] = static_cast<double>(term);
  }
  pmf[1] += pmf[0];
  pmf[0] = 0.0;
  return pmf;
}

double chi_square(std::span<const double> observed,
                  std::span<const double> expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

double chi_square_critical(std::size_t dof, double alpha) {
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

namespace {

std::size_t hamming_loop(const BitString& a, const BitString& b) {
  const std::string sa = a.to_string(), sb = b.to_string();
  std::size_t d = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) d += sa[i] != sb[i];
  return d;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CheckResult check_leading_ones_exhaustive(std::uint64_t seed) {
  CheckResult result{"leading_ones exhaustive (n<=8, 10 targets each)", true, {}};
  RandomStream rng(seed);
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int zi = 0; zi < 10; ++zi) {
      std::vector<int> z(n);
      for (int& b : z) b = static_cast<int>(rng.uniform_index(0, 1));
      const BitString zb(z);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
        const int expected = leading_ones_loop(x, z);
        const int got = leading_ones(BitString(x), zb);
        ++compared;
        if (got != expected) {
          result.passed = false;
          result.detail = "mismatch at n=" + std::to_string(n);
          return result;
        }
      }
    }
  }
  result.detail = std::to_string(compared) + " pairs agree";
  return result;
}

CheckResult check_perturbation_hamming(std::uint64_t seed, std::size_t trials) {
  CheckResult result{"perturbation flips exactly k bits", true, {}};
  RandomStream rng(seed);
  const std::pair<std::size_t, std::size_t> grid[] = {
      {100, 3}, {100, 5}, {100, 10}, {200, 10}};
  for (auto [n, k] : grid) {
    auto problem = DynamicLOProblem::with_random_target(n, k, 1, rng);
    for (std::size_t t = 0; t < trials; ++t) {
      auto [before, after] = problem.perturb(rng);
      if (hamming_loop(before, after) != k) {
        result.passed = false;
        result.detail = "wrong distance at n=" + std::to_string(n) +
                        " k=" + std::to_string(k);
        return result;
      }
    }
  }
  result.detail = std::to_string(4 * trials) + " perturbations checked";
  return result;
}

CheckResult check_strength_pmf(std::size_t n, double p, std::uint64_t seed,
                               std::size_t samples) {
  std::ostringstream name;
  name << "strength pmf chi-square (n=" << n << ", p=" << p << ")";
  CheckResult result{name.str(), true, {}};

  const auto pmf = shifted_binomial_pmf(n, p);
  std::vector<double> expected(4, 0.0);
  for (std::size_t m = 1; m <= n; ++m) expected[std::min<std::size_t>(m, 4) - 1] += pmf[m];
  for (double& e : expected) e *= static_cast<double>(samples);

  RandomStream rng(seed);
  const MutationParams params{n, p};
  std::vector<double> observed(4, 0.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t ell = sample_strength(params, rng);
    if (ell < 1 || ell > n) {
      result.passed = false;
      result.detail = "strength out of range: " + std::to_string(ell);
      return result;
    }
    observed[std::min<std::size_t>(ell, 4) - 1] += 1.0;
  }
  const double stat = chi_square(observed, expected);
  const double critical = chi_square_critical(3, 0.01);
  result.passed = stat < critical;

  std::ostringstream detail;
  detail.precision(4);
  detail << std::fixed;
  for (std::size_t m = 1; m <= 3; ++m) {
    detail << "P(l=" << m << ") obs " << observed[m - 1] / samples << " exp "
           << pmf[m] << "; ";
  }
  detail << "chi2 " << stat << " < " << critical;
  result.detail = detail.str();
  return result;
}

CheckResult check_subset_uniformity(std::uint64_t seed, std::size_t samples) {
  CheckResult result{"k-subset uniformity (n<=6)", true, {}};
  RandomStream rng(seed);
  // 15 pairs have more than one outcome; Bonferroni keeps the family at 0.01.
  constexpr double kPairAlpha = 0.01 / 15;
  std::size_t tested = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<double> counts(std::size_t{1} << n, 0.0);
      for (std::size_t s = 0; s < samples; ++s) {
        const auto subset = random_k_subset(n, k, rng);
        std::uint32_t mask = 0;
        for (std::size_t idx : subset) {
          if (idx < 1 || idx > n || (mask & (1u << (idx - 1)))) {
            result.passed = false;
            result.detail = "invalid subset at n=" + std::to_string(n);
            return result;
          }
          mask |= 1u << (idx - 1);
        }
        if (subset.size() != k) {
          result.passed = false;
          result.detail = "wrong subset size at n=" + std::to_string(n);
          return result;
        }
        counts[mask] += 1.0;
      }
      const std::size_t outcomes = binom(n, k);
      if (outcomes < 2) continue;
      std::vector<double> observed, expected;
      for (std::uint32_t mask = 0; mask < counts.size(); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        observed.push_back(counts[mask]);
        expected.push_back(static_cast<double>(samples) / outcomes);
      }
      const double stat = chi_square(observed, expected);
      if (stat >= chi_square_critical(outcomes - 1, kPairAlpha)) {
        result.passed = false;
        result.detail = "chi-square rejects uniformity at n=" +
                        std::to_string(n) + " k=" + std::to_string(k);
        return result;
      }
      ++tested;
    }
  }
  result.detail = std::to_string(tested) + " (n,k) pairs uniform, family-wise alpha 0.01";
  return result;
}

CheckResult check_kernel_equivalence(std::uint64_t seed) {
  CheckResult result{"SIMD kernels match scalar reference", true, {}};
  RandomStream rng(seed);
  const auto& ref = kernels::scalar_table();
  std::string names;
  for (const kernels::KernelTable* table : kernels::available_tables()) {
    names += std::string(table->name) + " ";
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t words = rng.uniform_index(0, 17);
      std::vector<kernels::Word> a(words), b(words);
      for (auto& w : a) w = rng.next_word();
      b = a;
      // Mix identical arrays, single-bit differences and random ones.
      const std::size_t mode = rng.uniform_index(0, 2);
      if (words > 0 && mode == 1) {
        const std::size_t bit = rng.uniform_index(0, words * 64 - 1);
        b[bit / 64] ^= kernels::Word{1} << (bit % 64);
      } else if (mode == 2) {
        for (auto& w : b) w = rng.next_word();
      }
      if (table->hamming(a.data(), b.data(), words) !=
              ref.hamming(a.data(), b.data(), words) ||
          table->first_mismatch(a.data(), b.data(), words) !=
              ref.first_mismatch(a.data(), b.data(), words)) {
        result.passed = false;
        result.detail = std::string(table->name) + " bit kernel mismatch";
        return result;
      }

      const std::size_t len = rng.uniform_index(0, 37);
      std::vector<std::int32_t> v(len);
      for (auto& x : v) x = static_cast<std::int32_t>(rng.uniform_index(0, 1000));
      std::vector<double> s1(len, 1.5), q1(len, 2.5), s2 = s1, q2 = q1;
      table->accumulate_moments(v.data(), s1.data(), q1.data(), len);
      ref.accumulate_moments(v.data(), s2.data(), q2.data(), len);
      if (std::memcmp(s1.data(), s2.data(), len * sizeof(double)) != 0 ||
          std::memcmp(q1.data(), q2.data(), len * sizeof(double)) != 0) {
        result.passed = false;
        result.detail = std::string(table->name) + " accumulate mismatch";
        return result;
      }
    }
  }
  result.detail = "tables: " + names + "(active: " +
                  std::string(kernels::active().name) + ")";
  return result;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_leading_ones_exhaustive(splitmix64(seed + 1)));
  out.push_back(check_perturbation_hamming(splitmix64(seed + 2)));
  out.push_back(check_strength_pmf(100, 0.01, splitmix64(seed + 3)));
  out.push_back(check_strength_pmf(200, 0.005, splitmix64(seed + 4)));
  out.push_back(check_subset_uniformity(splitmix64(seed + 5)));
  out.push_back(check_kernel_equivalence(splitmix64(seed + 6)));
  return out;
}

}  // namespace dynlo::oracle
