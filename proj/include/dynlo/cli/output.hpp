#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynlo/config.hpp"
#include "dynlo/experiment.hpp"
#include "json.hpp"

namespace dynlo::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent, 6 significant digits, '.' separator.
std::string format_float(double value);

/// eval_index,mean_best,std_best. eval_index is 1-based; with a stride > 1
/// only every stride-th evaluation (plus the last one) is emitted.
void write_curve_csv(std::ostream& out, const CurveStats& curve,
                     std::size_t stride);

/// run,period,best_fitness (both indices 1-based).
void write_periods_csv(std::ostream& out, std::span<const RunTrace> traces);

/// fitness,fraction.
void write_cumulative_csv(std::ostream& out,
                          std::span<const std::pair<int, double>> cumulative);

nlohmann::json make_meta(const ExperimentConfig& config,
                         std::span<const RunTrace> traces,
                         double wall_seconds);

struct OutputFiles {
  std::filesystem::path curve;
  std::filesystem::path periods;
  std::filesystem::path cumulative;
  std::filesystem::path meta;
};

OutputFiles output_paths(const std::filesystem::path& dir,
                         const std::string& id);

/// Writes the four result files of one experiment. Files are written to
/// temporaries and renamed into place; on failure every file of this
/// experiment is removed and IoError is thrown.
OutputFiles write_experiment(const std::filesystem::path& dir,
                             const ExperimentConfig& config,
                             std::span<const RunTrace> traces,
                             const AggregateResult& aggregate,
                             std::size_t stride, double wall_seconds);

}  // namespace dynlo::cli
