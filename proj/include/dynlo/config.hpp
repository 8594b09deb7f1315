#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace dynlo {

enum class AlgorithmKind { kEa, kRea, kSmoothRea };

/// Which counter drives the smoothREA schedule min{1, t/(s n^2)}.
enum class SmoothTime {
  kSinceChange,  // iterations since the last perturbation (default)
  kGlobal,       // the global iteration counter
};

std::string_view to_string(AlgorithmKind kind) noexcept;
std::string_view to_string(SmoothTime mode) noexcept;

/// Throws ConfigError on unknown names.
AlgorithmKind parse_algorithm(std::string_view name);
SmoothTime parse_smooth_time(std::string_view name);

/// Full parameterization of one experiment.
struct ExperimentConfig {
  AlgorithmKind algorithm = AlgorithmKind::kEa;
  std::size_t n = 100;
  std::size_t k = 1;
  std::int64_t tau = 1000;
  std::size_t gamma = 1;
  double s = 0.8;
  double p = 0.01;
  std::int64_t budget = 50'000;
  std::size_t runs = 100;
  std::uint64_t master_seed = 1;
  SmoothTime smooth_t = SmoothTime::kSinceChange;
  /// Pins the smoothREA probability of picking x* (diagnostic; unset in
  /// normal use).
  std::optional<double> pinned_p_star;

  /// Config with the standard defaults p = 1/n and gamma = k.
  static ExperimentConfig with_defaults(AlgorithmKind algorithm, std::size_t n,
                                        std::size_t k, std::int64_t tau);
};

/// Throws ConfigError naming the first offending key.
void validate(const ExperimentConfig& config);

/// Canonical JSON form: sorted keys, parameters that the algorithm ignores
/// are omitted. Output locations are never part of it.
nlohmann::json to_json(const ExperimentConfig& config);

/// Inverse of to_json. Throws ConfigError on malformed input.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Stable 12-hex-digit identifier: FNV-1a 64 of the canonical JSON.
std::string config_id(const ExperimentConfig& config);

}  // namespace dynlo
