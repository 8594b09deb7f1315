#include "dynlo/config.hpp"

#include <cstdio>
#include "json.hpp"

#include "dynlo/error.hpp"

namespace dynlo {

std::string_view to_string(AlgorithmKind kind) noexcept {
  switch (kind) {
    case AlgorithmKind::kEa:
      return "ea";
    case AlgorithmKind::kRea:
      return "rea";
    case AlgorithmKind::kSmoothRea:
      return "smooth_rea";
  }
  return "unknown";
}

std::string_view to_string(SmoothTime mode) noexcept {
  return mode == SmoothTime::kGlobal ? "global" : "since_change";
}

AlgorithmKind parse_algorithm(std::string_view name) {
  if (name == "ea") return AlgorithmKind::kEa;
  if (name == "rea") return AlgorithmKind::kRea;
  if (name == "smooth_rea") return AlgorithmKind::kSmoothRea;
  throw ConfigError("algorithm", "algorithm must be one of ea|rea|smooth_rea, got '" +
                                     std::string(name) + "'");
}

SmoothTime parse_smooth_time(std::string_view name) {
  if (name == "since_change") return SmoothTime::kSinceChange;
  if (name == "global") return SmoothTime::kGlobal;
  throw ConfigError("smooth_t", "smooth_t must be since_change|global, got '" +
                                    std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::with_defaults(AlgorithmKind algorithm,
                                                 std::size_t n, std::size_t k,
                                                 std::int64_t tau) {
  ExperimentConfig c;
  c.algorithm = algorithm;
  c.n = n;
  c.k = k;
  c.tau = tau;
  c.gamma = k;
  c.p = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.n < 1) throw ConfigError("n", "n must be positive");
  if (c.k < 1) throw ConfigError("k", "k must be positive");
  if (c.k > c.n) throw ConfigError("k", "k must be ≤ n");
  if (c.tau < 1) throw ConfigError("tau", "tau must be positive");
  if (c.budget < 1) throw ConfigError("budget", "budget must be positive");
  if (c.runs < 1) throw ConfigError("runs", "runs must be positive");
  if (!(c.p > 0.0 && c.p < 1.0)) throw ConfigError("p", "p must lie in (0,1)");
  if (c.algorithm != AlgorithmKind::kEa && c.gamma < 1) {
    throw ConfigError("gamma", "gamma must be positive");
  }
  if (c.algorithm == AlgorithmKind::kSmoothRea && !(c.s > 0.0)) {
    throw ConfigError("s", "s must be > 0");
  }
  if (c.pinned_p_star && !(*c.pinned_p_star >= 0.0 && *c.pinned_p_star <= 1.0)) {
    throw ConfigError("pinned_p_star", "pinned_p_star must lie in [0,1]");
  }
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["algorithm"] = to_string(c.algorithm);
  j["n"] = c.n;
  j["k"] = c.k;
  j["tau"] = c.tau;
  j["p"] = c.p;
  j["budget"] = c.budget;
  j["runs"] = c.runs;
  j["seed"] = c.master_seed;
  if (c.algorithm != AlgorithmKind::kEa) j["gamma"] = c.gamma;
  if (c.algorithm == AlgorithmKind::kSmoothRea) {
    j["s"] = c.s;
    j["smooth_t"] = to_string(c.smooth_t);
    if (c.pinned_p_star) j["pinned_p_star"] = *c.pinned_p_star;
  }
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config", "config must be an object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) {
      throw ConfigError(key, std::string("missing key '") + key + "'");
    }
    return j.at(key);
  };
  try {
    ExperimentConfig c;
    c.algorithm = parse_algorithm(need("algorithm").get<std::string>());
    c.n = need("n").get<std::size_t>();
    c.k = need("k").get<std::size_t>();
    c.tau = need("tau").get<std::int64_t>();
    c.p = need("p").get<double>();
    c.budget = need("budget").get<std::int64_t>();
    c.runs = need("runs").get<std::size_t>();
    c.master_seed = need("seed").get<std::uint64_t>();
    c.gamma = j.contains("gamma") ? j.at("gamma").get<std::size_t>() : c.k;
    if (j.contains("s")) c.s = j.at("s").get<double>();
    if (j.contains("smooth_t")) {
      c.smooth_t = parse_smooth_time(j.at("smooth_t").get<std::string>());
    }
    if (j.contains("pinned_p_star")) {
      c.pinned_p_star = j.at("pinned_p_star").get<double>();
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("malformed config: ") + e.what());
  }
}

std::string config_id(const ExperimentConfig& config) {
  const std::string canonical = to_json(config).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(hex, 12);
}

}  // namespace dynlo
