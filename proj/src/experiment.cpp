#include "dynlo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "dynlo/error.hpp"
#include "dynlo/kernels.hpp"
#include "dynlo/random.hpp"

namespace dynlo {

RunTrace run_one(const ExperimentConfig& config, std::size_t run_index) {
  RandomStream rng(derive_run_seed(config.master_seed, run_index));
  RunTrace trace = run_algorithm(config.algorithm, config, rng);
  trace.config_id = config_id(config);
  return trace;
}

std::vector<RunTrace> run_all(const ExperimentConfig& config,
                              unsigned workers) {
  validate(config);
  std::vector<RunTrace> traces(config.runs);
  const unsigned threads =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(config.runs)));
  if (threads == 1) {
    for (std::size_t i = 0; i < config.runs; ++i) traces[i] = run_one(config, i);
    return traces;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.runs; i = next++) {
          try {
            traces[i] = run_one(config, i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

CurveStats mean_curve(std::span<const RunTrace> traces) {
  if (traces.empty()) throw ContractViolation("mean_curve: no traces");
  const std::size_t len = traces.front().best_fitness_per_eval.size();
  std::vector<double> sum(len, 0.0), sumsq(len, 0.0);
  const auto& kernel = kernels::active();
  for (const RunTrace& t : traces) {
    if (t.best_fitness_per_eval.size() != len) {
      throw ContractViolation("mean_curve: traces differ in length");
    }
    kernel.accumulate_moments(t.best_fitness_per_eval.data(), sum.data(),
                              sumsq.data(), len);
  }

  const double runs = static_cast<double>(traces.size());
  CurveStats out;
  out.mean.resize(len);
  out.stddev.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double mean = sum[i] / runs;
    out.mean[i] = mean;
    if (traces.size() > 1) {
      const double var = (sumsq[i] - runs * mean * mean) / (runs - 1.0);
      out.stddev[i] = std::sqrt(std::max(0.0, var));
    } else {
      out.stddev[i] = 0.0;
    }
  }
  return out;
}

std::vector<std::pair<int, double>> cumulative_fraction(
    std::span<const std::int32_t> values, int max_fitness) {
  if (values.empty()) throw ContractViolation("cumulative_fraction: no values");
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_fitness) + 1, 0);
  for (std::int32_t v : values) {
    if (v < 0 || v > max_fitness) {
      throw ContractViolation("cumulative_fraction: value outside [0..max]");
    }
    ++counts[static_cast<std::size_t>(v)];
  }
  std::vector<std::pair<int, double>> out(counts.size());
  const double total = static_cast<double>(values.size());
  std::size_t at_least = 0;
  for (int v = max_fitness; v >= 0; --v) {
    at_least += counts[static_cast<std::size_t>(v)];
    out[static_cast<std::size_t>(v)] = {v, static_cast<double>(at_least) / total};
  }
  return out;
}

std::vector<std::pair<int, std::size_t>> histogram(
    std::span<const std::int32_t> values, int bin_width) {
  if (bin_width < 1) throw ContractViolation("histogram: bin_width must be >= 1");
  std::map<int, std::size_t> bins;
  for (std::int32_t v : values) {
    // Floor division so negative values land in the right bin too.
    const int q = v >= 0 ? v / bin_width : -((-v + bin_width - 1) / bin_width);
    ++bins[q * bin_width];
  }
  return {bins.begin(), bins.end()};
}

std::vector<std::int32_t> period_values(std::span<const RunTrace> traces) {
  std::vector<std::int32_t> out;
  for (const RunTrace& t : traces) {
    out.insert(out.end(), t.period_end_best.begin(), t.period_end_best.end());
  }
  return out;
}

AggregateResult aggregate(std::span<const RunTrace> traces, int max_fitness) {
  AggregateResult result;
  result.curve = mean_curve(traces);
  result.period_values = period_values(traces);
  if (!result.period_values.empty()) {
    result.cumulative = cumulative_fraction(result.period_values, max_fitness);
  }
  return result;
}

}  // namespace dynlo
