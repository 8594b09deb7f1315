// dynlo: experiments on dynamic LeadingOnes with periodic k-bit inversion.
//
//   dynlo run   [--config file.json] [--n .. --k .. --tau .. ...]
//   dynlo sweep --config file.json [overrides]
//   dynlo oracle

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynlo/cli/commands.hpp"
#include "dynlo/cli/sweep.hpp"
#include "dynlo/error.hpp"

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

const std::vector<FlagSpec> kFlags = {
    {"--algorithm", "algorithm", "ea|rea|smooth_rea (comma list allowed)"},
    {"--n", "n", "problem dimension"},
    {"--k", "k", "bits inverted per change"},
    {"--tau", "tau", "iterations between changes"},
    {"--gamma", "gamma", "REA slot radius (default: k)"},
    {"--s", "s", "smoothREA smoothness parameter (default 0.8)"},
    {"--p", "p", "mutation rate (default: 1/n)"},
    {"--budget", "budget", "evaluations per run (default 50000)"},
    {"--runs", "runs", "independent runs (default 100)"},
    {"--seed", "seed", "master seed (fallback: $DYNLO_SEED, then 1)"},
    {"--smooth-t", "smooth_t", "smoothREA clock: since_change|global"},
    {"--workers", "workers", "parallel runs"},
    {"--out", "out", "output directory (default results)"},
    {"--decimate", "decimate", "curve stride (default 1)"},
};

struct SweepOptions {
  std::string config_path;
  std::vector<std::optional<std::string>> values =
      std::vector<std::optional<std::string>>(kFlags.size());
};

void add_sweep_options(CLI::App* cmd, SweepOptions& opts, bool config_required) {
  auto* config = cmd->add_option("--config", opts.config_path,
                                 "JSON config file (see README)");
  if (config_required) config->required();
  for (std::size_t i = 0; i < kFlags.size(); ++i) {
    cmd->add_option(kFlags[i].flag, opts.values[i], kFlags[i].help);
  }
}

int execute_sweep(const SweepOptions& opts) {
  dynlo::cli::FlagMap flags;
  for (std::size_t i = 0; i < kFlags.size(); ++i) {
    if (opts.values[i]) flags[kFlags[i].key] = *opts.values[i];
  }
  std::optional<std::string> env_seed;
  if (const char* env = std::getenv("DYNLO_SEED")) env_seed = env;

  dynlo::cli::SweepSpec spec;
  try {
    spec = opts.config_path.empty()
               ? dynlo::cli::parse_config(nullptr, flags, env_seed)
               : dynlo::cli::parse_config_file(opts.config_path, flags, env_seed);
  } catch (const dynlo::ConfigError& e) {
    std::cerr << "error: " << e.key() << ": " << e.what() << '\n';
    return dynlo::cli::kExitValidation;
  }
  return dynlo::cli::run_command(spec, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic LeadingOnes benchmark: (1+1) EA, REA and smoothREA"};
  app.require_subcommand(1);

  SweepOptions run_opts;
  auto* run = app.add_subcommand("run", "run one experiment (or a small grid)");
  add_sweep_options(run, run_opts, false);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "run a grid described by a config file");
  add_sweep_options(sweep, sweep_opts, true);

  auto* oracle = app.add_subcommand("oracle", "run the built-in correctness oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dynlo::cli::kExitValidation;
  }

  try {
    if (*run) return execute_sweep(run_opts);
    if (*sweep) return execute_sweep(sweep_opts);
    if (*oracle) return dynlo::cli::oracle_command(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dynlo::cli::kExitIo;
  }
  return 0;
}
