#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dynlo/algorithms.hpp"
#include "dynlo/config.hpp"

namespace dynlo {

/// Run `run_index` of an experiment, on its own stream seeded from
/// (master_seed, run_index).
RunTrace run_one(const ExperimentConfig& config, std::size_t run_index);

/// All `config.runs` runs, on up to `workers` threads. The result does not
/// depend on the worker count.
std::vector<RunTrace> run_all(const ExperimentConfig& config,
                              unsigned workers = 1);

struct CurveStats {
  std::vector<double> mean;
  /// Sample standard deviation (zero for a single run).
  std::vector<double> stddev;
};

/// Per-evaluation mean and standard deviation of best-so-far fitness.
/// Throws ContractViolation on empty input or unequal lengths.
CurveStats mean_curve(std::span<const RunTrace> traces);

/// (v, fraction of values >= v) for every v in [0..max_fitness].
/// Throws ContractViolation on empty input.
std::vector<std::pair<int, double>> cumulative_fraction(
    std::span<const std::int32_t> values, int max_fitness);

/// Occupied half-open bins [lower, lower + bin_width), ascending.
std::vector<std::pair<int, std::size_t>> histogram(
    std::span<const std::int32_t> values, int bin_width);

/// All period-end values of all runs, run-major.
std::vector<std::int32_t> period_values(std::span<const RunTrace> traces);

struct AggregateResult {
  CurveStats curve;
  std::vector<std::int32_t> period_values;
  std::vector<std::pair<int, double>> cumulative;
};

AggregateResult aggregate(std::span<const RunTrace> traces, int max_fitness);

}  // namespace dynlo
