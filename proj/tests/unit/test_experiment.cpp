#include <chrono>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "dynlo/error.hpp"
#include "dynlo/experiment.hpp"

using namespace dynlo;

namespace {

RunTrace trace_of(std::vector<std::int32_t> values) {
  RunTrace t;
  t.best_fitness_per_eval = std::move(values);
  return t;
}

}  // namespace

TEST_CASE("run_one is a function of (config, run index)") {
  auto config = ExperimentConfig::with_defaults(AlgorithmKind::kRea, 40, 2, 500);
  config.budget = 3000;
  const auto a = run_one(config, 3);
  const auto b = run_one(config, 3);
  const auto c = run_one(config, 4);
  CHECK(a.best_fitness_per_eval == b.best_fitness_per_eval);
  CHECK(a.seed == b.seed);
  CHECK(a.seed != c.seed);
  CHECK(a.best_fitness_per_eval != c.best_fitness_per_eval);
  CHECK(a.config_id == config_id(config));
}

TEST_CASE("budget equal to tau gives one period value") {
  auto config = ExperimentConfig::with_defaults(AlgorithmKind::kEa, 5, 1, 10);
  config.budget = 10;
  const auto t = run_one(config, 0);
  CHECK(t.best_fitness_per_eval.size() == 10);
  CHECK(t.period_end_best.size() == 1);
  CHECK(t.period_end_best[0] == t.best_fitness_per_eval.back());
}

TEST_CASE("run_all does not depend on the worker count") {
  auto config = ExperimentConfig::with_defaults(AlgorithmKind::kSmoothRea, 50, 3, 400);
  config.budget = 4000;
  config.runs = 13;
  const auto serial = run_all(config, 1);
  const auto parallel = run_all(config, 4);
  REQUIRE(serial.size() == 13);
  REQUIRE(parallel.size() == 13);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].best_fitness_per_eval == parallel[i].best_fitness_per_eval);
    CHECK(serial[i].period_end_best == parallel[i].period_end_best);
    CHECK(serial[i].seed == parallel[i].seed);
  }
  config.runs = 1;
  CHECK(run_all(config, 2)[0].best_fitness_per_eval ==
        run_one(config, 0).best_fitness_per_eval);
}

TEST_CASE("100 runs of 50000 evaluations at n=100 finish within a minute") {
  auto config = ExperimentConfig::with_defaults(AlgorithmKind::kSmoothRea, 100, 5, 1000);
  const auto start = std::chrono::steady_clock::now();
  const auto traces = run_all(config, 1);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  CHECK(traces.size() == 100);
  CHECK(elapsed.count() < 60.0);
}

TEST_CASE("mean_curve examples") {
  SUBCASE("two runs") {
    const std::vector<RunTrace> traces{trace_of({1, 2, 3}), trace_of({3, 2, 5})};
    const auto curve = mean_curve(traces);
    CHECK(curve.mean == std::vector<double>{2, 2, 4});
    CHECK(curve.stddev[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(curve.stddev[1] == 0.0);
    CHECK(curve.stddev[2] == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("single run has zero spread") {
    const std::vector<RunTrace> traces{trace_of({4, 7})};
    const auto curve = mean_curve(traces);
    CHECK(curve.mean == std::vector<double>{4, 7});
    CHECK(curve.stddev == std::vector<double>{0, 0});
  }
  SUBCASE("a drop after a change shows in the mean") {
    const std::vector<RunTrace> traces{trace_of({10, 10, 2, 3}), trace_of({10, 10, 0, 1})};
    const auto curve = mean_curve(traces);
    CHECK(curve.mean == std::vector<double>{10, 10, 1, 2});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(mean_curve(std::vector<RunTrace>{}), ContractViolation);
    const std::vector<RunTrace> ragged{trace_of({1, 2}), trace_of({1})};
    CHECK_THROWS_AS(mean_curve(ragged), ContractViolation);
  }
}

TEST_CASE("cumulative_fraction examples") {
  SUBCASE("all at the optimum") {
    const std::vector<std::int32_t> v{100, 100};
    const auto c = cumulative_fraction(v, 100);
    REQUIRE(c.size() == 101);
    for (const auto& [fitness, fraction] : c) CHECK(fraction == 1.0);
  }
  SUBCASE("half at zero") {
    const std::vector<std::int32_t> v{0, 100};
    const auto c = cumulative_fraction(v, 100);
    CHECK(c[0].second == 1.0);
    CHECK(c[1].second == 0.5);
    CHECK(c[100].second == 0.5);
  }
  SUBCASE("ties") {
    const std::vector<std::int32_t> v{90, 95, 95, 100};
    const auto c = cumulative_fraction(v, 100);
    CHECK(c[90].second == 1.0);
    CHECK(c[91].second == 0.75);
    CHECK(c[95].second == 0.75);
    CHECK(c[96].second == 0.25);
    CHECK(c[100].second == 0.25);
  }
  SUBCASE("non-increasing and starts at one") {
    const std::vector<std::int32_t> v{3, 1, 4, 1, 5, 9, 2, 6};
    const auto c = cumulative_fraction(v, 10);
    CHECK(c.front().second == 1.0);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].second <= c[i - 1].second);
  }
  CHECK_THROWS_AS(cumulative_fraction(std::vector<std::int32_t>{}, 10), ContractViolation);
}

TEST_CASE("histogram examples and consistency with the cumulative view") {
  const std::vector<std::int32_t> v{0, 1, 4, 5, 5, 9, 10};
  const auto h = histogram(v, 5);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == std::pair<int, std::size_t>{0, 3});
  CHECK(h[1] == std::pair<int, std::size_t>{5, 3});
  CHECK(h[2] == std::pair<int, std::size_t>{10, 1});

  const auto c = cumulative_fraction(v, 10);
  for (const auto& [lower, count] : h) {
    const double next = lower + 5 <= 10 ? c[lower + 5].second : 0.0;
    CHECK((c[lower].second - next) * v.size() == doctest::Approx(double(count)));
  }
}

TEST_CASE("accounting identities on a full experiment") {
  auto config = ExperimentConfig::with_defaults(AlgorithmKind::kRea, 100, 5, 1000);
  config.runs = 100;
  const auto traces = run_all(config, 4);
  const auto result = aggregate(traces, 100);
  CHECK(result.period_values.size() == 5000);
  CHECK(result.curve.mean.size() == 50'000);
  CHECK(result.cumulative.size() == 101);

  config.budget = 25'000;
  config.runs = 100;
  const auto half = aggregate(run_all(config, 4), 100);
  CHECK(half.period_values.size() == 2500);

  config.tau = 60'000;
  const auto none = aggregate(run_all(config, 4), 100);
  CHECK(none.period_values.empty());
  CHECK(none.cumulative.empty());
}
