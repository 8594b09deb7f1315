#include "dynlo/cli/sweep.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dynlo/error.hpp"

namespace dynlo::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kGridKeys = {"algorithm", "n",    "k",      "tau",
                                         "gamma",     "s",    "p",      "budget",
                                         "runs",      "seed", "smooth_t"};

// Flattened view: grid keys keep their name, the rest become out/decimate/
// workers, which is also what the flags use.
std::map<std::string, json> flatten(const json* document) {
  std::map<std::string, json> out;
  if (document == nullptr || document->is_null()) return out;
  if (!document->is_object()) {
    throw ConfigError("config", "config document must be an object");
  }
  for (const auto& [section, body] : document->items()) {
    if (section != "grid" && section != "output" && section != "execution") {
      throw ConfigError(section, "unknown config section '" + section + "'");
    }
    if (!body.is_object()) {
      throw ConfigError(section, "section '" + section + "' must be an object");
    }
    for (const auto& [key, value] : body.items()) {
      std::string flat;
      if (section == "grid" && kGridKeys.count(key)) {
        flat = key;
      } else if (section == "output" && key == "dir") {
        flat = "out";
      } else if (section == "output" && key == "decimate") {
        flat = "decimate";
      } else if (section == "execution" && key == "workers") {
        flat = "workers";
      } else {
        throw ConfigError(section + "." + key,
                          "unknown key '" + section + "." + key + "'");
      }
      out[flat] = value;
    }
  }
  return out;
}

json parse_token(const std::string& token) {
  try {
    json j = json::parse(token);
    if (j.is_number() || j.is_boolean()) return j;
  } catch (const json::exception&) {
  }
  return json(token);
}

json parse_flag_value(const std::string& text) {
  std::vector<json> items;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) items.push_back(parse_token(token));
  if (items.size() == 1) return items.front();
  return json(items);
}

std::vector<json> as_list(const std::string& key, const json& value) {
  if (value.is_array()) {
    if (value.empty()) throw ConfigError(key, key + " must not be an empty list");
    return {value.begin(), value.end()};
  }
  return {value};
}

template <class T>
T convert(const std::string& key, const json& value) {
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!value.is_number_integer()) throw ConfigError(key, key + " must be an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (value.is_number_unsigned()) return value.get<T>();
        if (value.get<std::int64_t>() < 0) {
          throw ConfigError(key, key + " must be positive");
        }
      }
      return value.get<T>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!value.is_number()) throw ConfigError(key, key + " must be a number");
      return value.get<T>();
    } else {
      if (!value.is_string()) throw ConfigError(key, key + " must be a string");
      return value.get<T>();
    }
  } catch (const json::exception&) {
    throw ConfigError(key, "invalid value for " + key);
  }
}

template <class T>
std::vector<T> list_of(const std::string& key, const json& value) {
  std::vector<T> out;
  for (const json& item : as_list(key, value)) out.push_back(convert<T>(key, item));
  return out;
}

template <class T>
void require_positive(const std::string& key, const std::vector<T>& values) {
  for (const T& v : values) {
    if (!(v > T{0})) throw ConfigError(key, key + " must be positive");
  }
}

}  // namespace

SweepSpec parse_config(const nlohmann::json* document, const FlagMap& flags,
                       std::optional<std::string> env_seed) {
  std::map<std::string, json> settings = flatten(document);
  for (const auto& [raw_key, text] : flags) {
    std::string key = raw_key == "smooth-t" ? "smooth_t" : raw_key;
    if (!kGridKeys.count(key) && key != "out" && key != "decimate" &&
        key != "workers") {
      throw ConfigError(key, "unknown key '" + key + "'");
    }
    settings[key] = key == "out" ? json(text) : parse_flag_value(text);
  }
  if (!settings.count("seed") && env_seed && !env_seed->empty()) {
    settings["seed"] = parse_token(*env_seed);
  }

  SweepSpec spec;
  auto required = [&](const char* key) -> const json& {
    auto it = settings.find(key);
    if (it == settings.end()) {
      throw ConfigError(key, std::string("missing required setting '") + key + "'");
    }
    return it->second;
  };

  for (const auto& name : list_of<std::string>("algorithm", required("algorithm"))) {
    spec.algorithms.push_back(parse_algorithm(name));
  }
  spec.n = list_of<std::size_t>("n", required("n"));
  require_positive("n", spec.n);
  spec.k = list_of<std::size_t>("k", required("k"));
  require_positive("k", spec.k);
  spec.tau = list_of<std::int64_t>("tau", required("tau"));
  require_positive("tau", spec.tau);

  if (auto it = settings.find("gamma"); it != settings.end()) {
    spec.gamma = list_of<std::size_t>("gamma", it->second);
    require_positive("gamma", spec.gamma);
  }
  if (auto it = settings.find("s"); it != settings.end()) {
    spec.s = list_of<double>("s", it->second);
    require_positive("s", spec.s);
  }
  if (auto it = settings.find("p"); it != settings.end()) {
    spec.p = list_of<double>("p", it->second);
    for (double p : spec.p) {
      if (!(p > 0.0 && p < 1.0)) throw ConfigError("p", "p must lie in (0,1)");
    }
  }
  if (auto it = settings.find("budget"); it != settings.end()) {
    spec.budget = list_of<std::int64_t>("budget", it->second);
    require_positive("budget", spec.budget);
  }
  if (auto it = settings.find("runs"); it != settings.end()) {
    spec.runs = list_of<std::size_t>("runs", it->second);
    require_positive("runs", spec.runs);
  }
  if (auto it = settings.find("seed"); it != settings.end()) {
    spec.seeds = list_of<std::uint64_t>("seed", it->second);
  }
  if (auto it = settings.find("smooth_t"); it != settings.end()) {
    spec.smooth_t.clear();
    for (const auto& name : list_of<std::string>("smooth_t", it->second)) {
      spec.smooth_t.push_back(parse_smooth_time(name));
    }
  }
  if (auto it = settings.find("out"); it != settings.end()) {
    spec.out_dir = convert<std::string>("out", it->second);
  }
  if (auto it = settings.find("decimate"); it != settings.end()) {
    spec.decimate = convert<std::size_t>("decimate", it->second);
    if (spec.decimate < 1) throw ConfigError("decimate", "decimate must be positive");
  }
  if (auto it = settings.find("workers"); it != settings.end()) {
    spec.workers = convert<unsigned>("workers", it->second);
    if (spec.workers < 1) throw ConfigError("workers", "workers must be positive");
  }
  return spec;
}

SweepSpec parse_config_file(const std::filesystem::path& path,
                            const FlagMap& flags,
                            std::optional<std::string> env_seed) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read config file " + path.string());
  json document;
  try {
    document = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config", "cannot parse " + path.string() + ": " + e.what());
  }
  return parse_config(&document, flags, std::move(env_seed));
}

std::vector<ExperimentConfig> expand(const SweepSpec& spec) {
  std::vector<ExperimentConfig> out;
  std::set<std::string> seen;
  for (AlgorithmKind algorithm : spec.algorithms)
    for (std::size_t n : spec.n)
      for (std::size_t k : spec.k)
        for (std::int64_t tau : spec.tau)
          for (std::size_t gi = 0; gi < std::max<std::size_t>(1, spec.gamma.size()); ++gi)
            for (double s : spec.s)
              for (std::size_t pi = 0; pi < std::max<std::size_t>(1, spec.p.size()); ++pi)
                for (std::int64_t budget : spec.budget)
                  for (std::size_t runs : spec.runs)
                    for (std::uint64_t seed : spec.seeds)
                      for (SmoothTime mode : spec.smooth_t) {
                        ExperimentConfig c =
                            ExperimentConfig::with_defaults(algorithm, n, k, tau);
                        if (!spec.gamma.empty()) c.gamma = spec.gamma[gi];
                        if (!spec.p.empty()) c.p = spec.p[pi];
                        c.s = s;
                        c.budget = budget;
                        c.runs = runs;
                        c.master_seed = seed;
                        c.smooth_t = mode;
                        validate(c);
                        if (seen.insert(config_id(c)).second) out.push_back(c);
                      }
  return out;
}

}  // namespace dynlo::cli
