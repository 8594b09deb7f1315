#include "dynlo/cli/output.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <system_error>

#include "dynlo/kernels.hpp"
#include "dynlo/random.hpp"

namespace dynlo::cli {

std::string format_float(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& out, const CurveStats& curve,
                     std::size_t stride) {
  if (stride < 1) stride = 1;
  out << "eval_index,mean_best,std_best\n";
  const std::size_t len = curve.mean.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (i % stride != 0 && i + 1 != len) continue;
    out << (i + 1) << ',' << format_float(curve.mean[i]) << ','
        << format_float(curve.stddev[i]) << '\n';
  }
}

void write_periods_csv(std::ostream& out, std::span<const RunTrace> traces) {
  out << "run,period,best_fitness\n";
  for (std::size_t r = 0; r < traces.size(); ++r) {
    const auto& values = traces[r].period_end_best;
    for (std::size_t p = 0; p < values.size(); ++p) {
      out << (r + 1) << ',' << (p + 1) << ',' << values[p] << '\n';
    }
  }
}

void write_cumulative_csv(std::ostream& out,
                          std::span<const std::pair<int, double>> cumulative) {
  out << "fitness,fraction\n";
  for (const auto& [v, fraction] : cumulative) {
    out << v << ',' << format_float(fraction) << '\n';
  }
}

nlohmann::json make_meta(const ExperimentConfig& config,
                         std::span<const RunTrace> traces,
                         double wall_seconds) {
  nlohmann::json meta;
  meta["id"] = config_id(config);
  meta["config"] = to_json(config);
  meta["master_seed"] = config.master_seed;
  std::vector<std::uint64_t> seeds;
  seeds.reserve(traces.size());
  for (const RunTrace& t : traces) seeds.push_back(t.seed);
  meta["run_seeds"] = seeds;
  meta["generator"] = RandomStream::kGeneratorName;
  meta["seed_derivation"] = kSeedMixerName;
  meta["initial_target"] = "uniform random per run";
  meta["kernels"] = kernels::active().name;
  meta["tool_version"] = kToolVersion;
  meta["wall_time_seconds"] = wall_seconds;
  return meta;
}

OutputFiles output_paths(const std::filesystem::path& dir,
                         const std::string& id) {
  return OutputFiles{dir / ("curve_" + id + ".csv"),
                     dir / ("periods_" + id + ".csv"),
                     dir / ("cumulative_" + id + ".csv"),
                     dir / ("meta_" + id + ".json")};
}

namespace {

void write_file(const std::filesystem::path& target,
                const std::function<void(std::ostream&)>& body,
                std::vector<std::filesystem::path>& written) {
  std::filesystem::path tmp = target;
  tmp += ".partial";
  written.push_back(tmp);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    body(out);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
  written.push_back(target);
}

}  // namespace

OutputFiles write_experiment(const std::filesystem::path& dir,
                             const ExperimentConfig& config,
                             std::span<const RunTrace> traces,
                             const AggregateResult& aggregate,
                             std::size_t stride, double wall_seconds) {
  const OutputFiles files = output_paths(dir, config_id(config));
  std::vector<std::filesystem::path> written;
  try {
    write_file(files.curve,
               [&](std::ostream& o) { write_curve_csv(o, aggregate.curve, stride); },
               written);
    write_file(files.periods,
               [&](std::ostream& o) { write_periods_csv(o, traces); }, written);
    write_file(files.cumulative,
               [&](std::ostream& o) { write_cumulative_csv(o, aggregate.cumulative); },
               written);
    write_file(files.meta,
               [&](std::ostream& o) {
                 o << make_meta(config, traces, wall_seconds).dump(2) << '\n';
               },
               written);
  } catch (...) {
    std::error_code ec;
    for (const auto& path : written) std::filesystem::remove(path, ec);
    throw;
  }
  return files;
}

}  // namespace dynlo::cli
