#include "dynlo/cli/commands.hpp"

#include <chrono>
#include <ostream>
#include <system_error>

#include "dynlo/cli/output.hpp"
#include "dynlo/error.hpp"
#include "dynlo/experiment.hpp"
#include "dynlo/oracle.hpp"

namespace dynlo::cli {

int run_command(const SweepSpec& spec, std::ostream& log, std::ostream& err) {
  std::vector<ExperimentConfig> configs;
  try {
    configs = expand(spec);
  } catch (const ConfigError& e) {
    err << "error: " << e.key() << ": " << e.what() << '\n';
    return kExitValidation;
  }

  std::error_code ec;
  std::filesystem::create_directories(spec.out_dir, ec);
  if (ec || !std::filesystem::is_directory(spec.out_dir)) {
    err << "error: cannot create output directory " << spec.out_dir.string()
        << (ec ? ": " + ec.message() : std::string()) << '\n';
    return kExitIo;
  }

  for (const ExperimentConfig& config : configs) {
    const auto start = std::chrono::steady_clock::now();
    const auto traces = run_all(config, spec.workers);
    const auto result = aggregate(traces, static_cast<int>(config.n));
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    try {
      write_experiment(spec.out_dir, config, traces, result, spec.decimate,
                       wall);
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kExitIo;
    }
    log << config_id(config) << ' ' << to_json(config).dump()
        << " final_mean=" << format_float(result.curve.mean.back())
        << " wall=" << format_float(wall) << "s\n";
  }
  return kExitOk;
}

int oracle_command(std::ostream& out, std::uint64_t seed) {
  bool all_passed = true;
  for (const auto& check : oracle::run_all_checks(seed)) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
        << check.detail << '\n';
    all_passed = all_passed && check.passed;
  }
  return all_passed ? kExitOk : kExitOracleFailure;
}

}  // namespace dynlo::cli
