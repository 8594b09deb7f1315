#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynlo/config.hpp"
#include "json.hpp"

namespace dynlo::cli {

/// Lists of values per experiment setting; the experiments are their
/// cartesian product. Empty `gamma` means gamma = k, empty `p` means 1/n.
struct SweepSpec {
  std::vector<AlgorithmKind> algorithms;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::vector<std::int64_t> tau;
  std::vector<std::size_t> gamma;
  std::vector<double> s{0.8};
  std::vector<double> p;
  std::vector<std::int64_t> budget{50'000};
  std::vector<std::size_t> runs{100};
  std::vector<std::uint64_t> seeds{1};
  std::vector<SmoothTime> smooth_t{SmoothTime::kSinceChange};

  std::filesystem::path out_dir{"results"};
  std::size_t decimate = 1;
  unsigned workers = 1;
};

/// Command-line overrides keyed by setting name (`n`, `tau`, `smooth_t`,
/// `out`, ...). Values may be comma-separated lists.
using FlagMap = std::map<std::string, std::string>;

/// Resolve a sweep from an optional parsed config document and flags.
/// Flags win over the document; `env_seed` (DYNLO_SEED) is the last resort
/// for the master seed. Throws ConfigError naming the offending key.
///
/// Document schema:
///   { "grid":      { "algorithm", "n", "k", "tau", "gamma", "s", "p",
///                    "budget", "runs", "seed", "smooth_t" },
///     "output":    { "dir", "decimate" },
///     "execution": { "workers" } }
/// Every grid entry is a scalar or an array of scalars.
SweepSpec parse_config(const nlohmann::json* document, const FlagMap& flags,
                       std::optional<std::string> env_seed = std::nullopt);

/// Reads `path` (JSON) and calls parse_config. Throws ConfigError when the
/// file cannot be read or parsed.
SweepSpec parse_config_file(const std::filesystem::path& path,
                            const FlagMap& flags,
                            std::optional<std::string> env_seed = std::nullopt);

/// All distinct, validated experiment configs of the sweep, in a stable
/// order. Settings that an algorithm ignores do not create duplicates.
std::vector<ExperimentConfig> expand(const SweepSpec& spec);

}  // namespace dynlo::cli
