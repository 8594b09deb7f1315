#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dynlo/cli/commands.hpp"
#include "dynlo/cli/output.hpp"
#include "dynlo/cli/sweep.hpp"
#include "dynlo/error.hpp"

using namespace dynlo;
using namespace dynlo::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("dynlo_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  return lines;
}

}  // namespace

TEST_CASE("defaults: gamma = k, p = 1/n, 100 runs, 50000 evaluations") {
  const auto spec = parse_config(nullptr, {{"algorithm", "rea"}, {"n", "100"},
                                           {"k", "5"}, {"tau", "1000"}});
  const auto configs = expand(spec);
  REQUIRE(configs.size() == 1);
  CHECK(configs[0].gamma == 5);
  CHECK(configs[0].p == doctest::Approx(0.01));
  CHECK(configs[0].runs == 100);
  CHECK(configs[0].budget == 50'000);
  CHECK(configs[0].master_seed == 1);
}

TEST_CASE("k > n is rejected naming k") {
  const auto spec = parse_config(nullptr, {{"algorithm", "ea"}, {"n", "100"},
                                           {"k", "150"}, {"tau", "1000"}});
  try {
    expand(spec);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "k");
  }
  std::ostringstream log, err;
  CHECK(run_command(spec, log, err) == kExitValidation);
  CHECK(err.str().find("k") != std::string::npos);
}

TEST_CASE("a smooth_rea sweep over s and tau expands to the full grid") {
  const auto doc = nlohmann::json::parse(R"({
    "grid": {"algorithm": "smooth_rea", "n": 100, "k": 5,
             "tau": [500, 1000, 1500, 2000, 2500, 3000, 3500, 4000, 4500, 5000, 6000],
             "s": [0.2, 0.4, 0.8, 1.2, 1.6, 2.0, 3.0]}
  })");
  CHECK(expand(parse_config(&doc, {})).size() == 77);

  // Settings an algorithm ignores do not multiply its configs.
  const auto ea = nlohmann::json::parse(R"({
    "grid": {"algorithm": ["ea", "smooth_rea"], "n": 50, "k": 2, "tau": 100,
             "s": [0.4, 0.8]}
  })");
  CHECK(expand(parse_config(&ea, {})).size() == 3);
}

TEST_CASE("config errors name the offending key") {
  const auto unknown = nlohmann::json::parse(R"({"grid": {"algorithm": "ea", "n": 10,
                                                 "k": 1, "tau": 5, "mu": 3}})");
  CHECK_THROWS_AS(parse_config(&unknown, {}), ConfigError);
  const auto section = nlohmann::json::parse(R"({"extras": {}})");
  CHECK_THROWS_AS(parse_config(&section, {}), ConfigError);
  CHECK_THROWS_AS(parse_config(nullptr, {{"mu", "3"}}), ConfigError);
  try {
    parse_config(nullptr, {{"algorithm", "ea"}, {"n", "10"}, {"k", "1"}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "tau");
  }
  CHECK_THROWS_AS(parse_config(nullptr, {{"algorithm", "ga"}, {"n", "10"},
                                         {"k", "1"}, {"tau", "5"}}),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(nullptr, {{"algorithm", "ea"}, {"n", "10"},
                                         {"k", "1"}, {"tau", "5"}, {"p", "1.5"}}),
                  ConfigError);
}

TEST_CASE("flags override the file, DYNLO_SEED is only a fallback") {
  const auto doc = nlohmann::json::parse(R"({
    "grid": {"algorithm": "ea", "n": 20, "k": 1, "tau": 50, "runs": 3, "seed": 9}
  })");
  CHECK(parse_config(&doc, {{"n", "30"}}).n == std::vector<std::size_t>{30});
  CHECK(parse_config(&doc, {}, "77").seeds == std::vector<std::uint64_t>{9});

  const auto no_seed = nlohmann::json::parse(R"({
    "grid": {"algorithm": "ea", "n": 20, "k": 1, "tau": 50}
  })");
  CHECK(parse_config(&no_seed, {}, "77").seeds == std::vector<std::uint64_t>{77});
  CHECK(parse_config(&no_seed, {{"seed", "5"}}, "77").seeds ==
        std::vector<std::uint64_t>{5});
  CHECK(parse_config(&no_seed, {}).seeds == std::vector<std::uint64_t>{1});
}

TEST_CASE("run_command writes files with the expected row counts") {
  TempDir dir("rows");
  const auto spec = parse_config(
      nullptr, {{"algorithm", "rea"}, {"n", "20"}, {"k", "2"}, {"tau", "300"},
                {"budget", "1000"}, {"runs", "4"}, {"out", dir.path.string()}});
  std::ostringstream log, err;
  REQUIRE(run_command(spec, log, err) == kExitOk);
  const auto config = expand(spec)[0];
  const auto files = output_paths(dir.path, config_id(config));
  CHECK(line_count(files.curve) == 1000 + 1);
  CHECK(line_count(files.periods) == 4 * (1000 / 300) + 1);
  CHECK(line_count(files.cumulative) == 20 + 1 + 1);
  CHECK(slurp(files.curve).rfind("eval_index,mean_best,std_best\n", 0) == 0);
  CHECK(slurp(files.periods).rfind("run,period,best_fitness\n", 0) == 0);
  CHECK(slurp(files.cumulative).rfind("fitness,fraction\n", 0) == 0);
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().extension() != ".partial");
  }

  SUBCASE("decimated curve keeps the last row") {
    TempDir other("decimate");
    auto decimated = spec;
    decimated.out_dir = other.path;
    decimated.decimate = 300;
    REQUIRE(run_command(decimated, log, err) == kExitOk);
    const auto curve = slurp(output_paths(other.path, config_id(config)).curve);
    // Rows 1, 301, 601, 901 and the final 1000.
    CHECK(line_count(output_paths(other.path, config_id(config)).curve) == 1 + 5);
    CHECK(curve.find("\n1000,") != std::string::npos);
  }
}

TEST_CASE("re-running a config reproduces every CSV byte for byte") {
  TempDir a("repro_a"), b("repro_b");
  FlagMap flags{{"algorithm", "smooth_rea,ea"}, {"n", "25"}, {"k", "3"},
                {"tau", "200"}, {"budget", "900"}, {"runs", "3"}, {"seed", "11"}};
  flags["out"] = a.path.string();
  auto spec_a = parse_config(nullptr, flags);
  flags["out"] = b.path.string();
  flags["workers"] = "3";
  auto spec_b = parse_config(nullptr, flags);
  std::ostringstream log, err;
  REQUIRE(run_command(spec_a, log, err) == kExitOk);
  REQUIRE(run_command(spec_b, log, err) == kExitOk);
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a.path)) {
    if (entry.path().extension() != ".csv") continue;
    CHECK(slurp(entry.path()) == slurp(b.path / entry.path().filename()));
    ++compared;
  }
  CHECK(compared == 6);
}

TEST_CASE("metadata reproduces its config id") {
  TempDir dir("meta");
  const auto spec = parse_config(
      nullptr, {{"algorithm", "smooth_rea"}, {"n", "15"}, {"k", "2"}, {"tau", "100"},
                {"s", "1.2"}, {"smooth_t", "global"}, {"budget", "300"},
                {"runs", "2"}, {"out", dir.path.string()}});
  std::ostringstream log, err;
  REQUIRE(run_command(spec, log, err) == kExitOk);
  const auto config = expand(spec)[0];
  const auto id = config_id(config);
  const auto meta = nlohmann::json::parse(slurp(output_paths(dir.path, id).meta));
  CHECK(meta.at("id") == id);
  CHECK(config_id(config_from_json(meta.at("config"))) == id);
  CHECK(meta.at("run_seeds").size() == 2);
  CHECK(meta.at("tool_version") == std::string(kToolVersion));
}

TEST_CASE("an output path that is a file is an I/O error") {
  TempDir dir("io");
  const auto blocker = dir.path / "not_a_dir";
  std::ofstream(blocker) << "x";
  const auto spec = parse_config(
      nullptr, {{"algorithm", "ea"}, {"n", "10"}, {"k", "1"}, {"tau", "10"},
                {"budget", "20"}, {"runs", "1"}, {"out", blocker.string()}});
  std::ostringstream log, err;
  CHECK(run_command(spec, log, err) == kExitIo);
}

TEST_CASE("format_float") {
  CHECK(format_float(0.5) == "0.5");
  CHECK(format_float(58.5678912) == "58.5679");
  CHECK(format_float(0.0) == "0");
}
