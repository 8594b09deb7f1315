#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "dynlo/error.hpp"
#include "dynlo/mutation.hpp"
#include "dynlo/oracle.hpp"
#include "dynlo/random.hpp"

using dynlo::BitString;
using dynlo::MutationParams;
using dynlo::RandomStream;

TEST_CASE("closed-form shifted binomial pmf, n=100 p=0.01") {
  const auto pmf = dynlo::oracle::shifted_binomial_pmf(100, 0.01);
  CHECK(pmf[0] == 0.0);
  // (1-p)^n + n p (1-p)^(n-1) and C(n,2) p^2 (1-p)^(n-2).
  CHECK(pmf[1] == doctest::Approx(std::pow(0.99, 100) + std::pow(0.99, 99)).epsilon(1e-12));
  CHECK(pmf[2] == doctest::Approx(4950 * 1e-4 * std::pow(0.99, 98)).epsilon(1e-12));
  CHECK(std::abs(pmf[1] - 0.7358) < 1e-4);
  CHECK(std::abs(pmf[2] - 0.1849) < 1e-4);
  double total = 0;
  for (double v : pmf) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample_strength frequencies match the closed form") {
  RandomStream rng(41);
  const MutationParams params = MutationParams::standard(100);
  const auto pmf = dynlo::oracle::shifted_binomial_pmf(100, 0.01);
  std::map<std::size_t, int> counts;
  const int draws = 1'000'000;
  for (int i = 0; i < draws; ++i) ++counts[dynlo::sample_strength(params, rng)];
  CHECK(counts.count(0) == 0);
  CHECK(std::abs(counts[1] / double(draws) - pmf[1]) <= 0.005);
  CHECK(std::abs(counts[2] / double(draws) - pmf[2]) <= 0.005);
}

TEST_CASE("sample_strength chi-square goodness of fit") {
  for (auto [n, p] : {std::pair{100u, 0.01}, std::pair{200u, 0.005}}) {
    const auto result = dynlo::oracle::check_strength_pmf(n, p, 42 + n);
    INFO(result.detail);
    CHECK(result.passed);
  }
}

TEST_CASE("mut_ell flips exactly ell positions") {
  RandomStream rng(43);
  const auto x = dynlo::random_bitstring(100, rng);
  for (std::size_t ell = 1; ell <= 100; ++ell) {
    CHECK(hamming(x, dynlo::mut_ell(x, ell, rng)) == ell);
  }
  const auto complement = dynlo::mut_ell(x, 100, rng);
  CHECK(hamming(x, complement) == 100);
  CHECK_THROWS_AS(dynlo::mut_ell(x, 0, rng), dynlo::ContractViolation);
  CHECK_THROWS_AS(dynlo::mut_ell(x, 101, rng), dynlo::ContractViolation);
}

TEST_CASE("mut_ell n=3 ell=1 reaches each neighbour with probability 1/3") {
  RandomStream rng(44);
  const auto x = BitString::from_string("010");
  std::map<std::string, int> counts;
  const int draws = 100'000;
  for (int i = 0; i < draws; ++i) ++counts[dynlo::mut_ell(x, 1, rng).to_string()];
  REQUIRE(counts.size() == 3);
  for (const char* neighbour : {"110", "000", "011"}) {
    CHECK(std::abs(counts[neighbour] / double(draws) - 1.0 / 3.0) <= 0.01);
  }
}

TEST_CASE("shift mutation never returns the parent") {
  RandomStream rng(45);
  const auto params = MutationParams::standard(100);
  const auto x = dynlo::random_bitstring(100, rng);
  int identical = 0;
  double distance = 0;
  const int draws = 1'000'000;
  for (int i = 0; i < draws; ++i) {
    const auto y = dynlo::shift_mutation(x, params, rng);
    const auto d = hamming(x, y);
    identical += d == 0;
    distance += static_cast<double>(d);
  }
  CHECK(identical == 0);

  // Expected strength from the closed-form pmf: 1 + (1-p)^n.
  const auto pmf = dynlo::oracle::shifted_binomial_pmf(100, 0.01);
  double expected = 0;
  for (std::size_t m = 0; m < pmf.size(); ++m) expected += static_cast<double>(m) * pmf[m];
  CHECK(std::abs(expected - 1.37) <= 0.01);
  CHECK(std::abs(distance / draws - expected) <= 0.01);
}

TEST_CASE("shift mutation on n=1 always complements") {
  RandomStream rng(46);
  const MutationParams params{1, 0.5};
  const auto x = BitString::from_string("1");
  for (int i = 0; i < 1000; ++i) {
    CHECK(dynlo::shift_mutation(x, params, rng).to_string() == "0");
  }
}

TEST_CASE("shift mutation commutes with complement masks (n <= 4)") {
  RandomStream rng(47);
  const int draws = 100'000;
  for (std::size_t n = 1; n <= 4; ++n) {
    // p = 1/n is not a valid rate for n = 1.
    const MutationParams use{n, n == 1 ? 0.5 : 1.0 / static_cast<double>(n)};
    const auto x = dynlo::random_bitstring(n, rng);
    for (std::uint32_t mask_bits = 0; mask_bits < (1u << n); ++mask_bits) {
      std::vector<std::size_t> mask;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask_bits & (1u << i)) mask.push_back(i + 1);
      }
      std::map<std::string, int> lhs, rhs;
      const auto masked_x = flip_bits(x, mask);
      for (int i = 0; i < draws; ++i) {
        ++lhs[flip_bits(dynlo::shift_mutation(x, use, rng), mask).to_string()];
        ++rhs[dynlo::shift_mutation(masked_x, use, rng).to_string()];
      }
      for (std::uint32_t outcome = 0; outcome < (1u << n); ++outcome) {
        std::string key(n, '0');
        for (std::size_t i = 0; i < n; ++i) key[i] = (outcome >> i) & 1u ? '1' : '0';
        CHECK(std::abs(lhs[key] - rhs[key]) / double(draws) <= 0.01);
      }
    }
  }
}

TEST_CASE("mutation params validation") {
  CHECK_NOTHROW(dynlo::validate(MutationParams::standard(10)));
  CHECK_THROWS_AS(dynlo::validate(MutationParams{10, 0.0}), dynlo::ContractViolation);
  CHECK_THROWS_AS(dynlo::validate(MutationParams{10, 1.0}), dynlo::ContractViolation);
  CHECK_THROWS_AS(dynlo::validate(MutationParams{0, 0.5}), dynlo::ContractViolation);
}
