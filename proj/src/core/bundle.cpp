#include "core/bundle.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "json.hpp"

#include "core/engine.hpp"
#include "core/scenario.hpp"
#include "core/trace_io.hpp"
#include "core/version.hpp"

namespace acsee::bundle {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write file: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write error on: " + path);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw Error(ErrorKind::Io,
                "cannot create directory " + dir + ": " + ec.message());
}

const char* agg_name(BenefitAgg a) {
  return a == BenefitAgg::Mean ? "mean" : "sum";
}
const char* radius_name(DeathRadius r) {
  return r == DeathRadius::Moore1 ? "moore1" : "pr";
}

ordered_json options_json(const EngineOptions& o) {
  ordered_json j;
  j["eps_bal"] = o.eps_bal;
  j["p_mut"] = o.p_mut;
  j["benefit_agg"] = agg_name(o.benefit_agg);
  j["death_radius"] = radius_name(o.death_radius);
  j["emotion_enabled"] = o.emotion_enabled;
  j["heat_sigma"] = o.heat_sigma;
  j["heat_every"] = o.heat_every;
  j["link_radius"] = o.link_radius;
  j["min_group"] = o.min_group;
  return j;
}

void write_manifest(const std::string& path, const char* kind,
                    const ScenarioConfig& config, const EngineOptions& opts,
                    const std::vector<std::uint64_t>& seeds,
                    ordered_json extra = ordered_json::object()) {
  ordered_json j;
  j["schema"] = "acsee.manifest.v1";
  j["kind"] = kind;
  j["build"] = {{"name", kBuildName}, {"version", kBuildVersion}};
  j["scenario"] = ordered_json::parse(serialize_scenario(config));
  j["options"] = options_json(opts);
  j["seeds"] = seeds;
  for (auto& [k, v] : extra.items()) j[k] = v;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

constexpr const char* kColumns[] = {
    "live_civilians", "live_activists",      "live_cops",
    "dead_total",     "active_ratio",        "coop_ratio_cops",
    "coop_ratio_activists", "mean_e_civ",    "mean_e_act",
    "mean_e_cop"};

double series_column(const Series& s, std::size_t col, std::size_t row) {
  switch (col) {
    case 0: return s.live_civilians[row];
    case 1: return s.live_activists[row];
    case 2: return s.live_cops[row];
    case 3: return s.dead_total[row];
    case 4: return s.active_ratio[row];
    case 5: return s.coop_ratio_cops[row];
    case 6: return s.coop_ratio_activists[row];
    case 7: return s.mean_e_civ[row];
    case 8: return s.mean_e_act[row];
    default: return s.mean_e_cop[row];
  }
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_series_csv(const std::string& path, const Series& series,
                      const Series* stddev) {
  auto out = open_out(path);
  out << "# schema: acsee.series.v1\n";
  out << "tick";
  for (const char* c : kColumns) out << ',' << c;
  if (stddev)
    for (const char* c : kColumns) out << ',' << c << "_std";
  out << '\n';

  for (std::size_t row = 0; row < series.size(); ++row) {
    out << series.tick[row];
    for (std::size_t col = 0; col < 10; ++col)
      out << ',' << format_double(series_column(series, col, row));
    if (stddev)
      for (std::size_t col = 0; col < 10; ++col)
        out << ',' << format_double(series_column(*stddev, col, row));
    out << '\n';
  }
  finish(out, path);
}

void write_heatmap_csv(const std::string& path, int tick,
                       const HeatField& field) {
  auto out = open_out(path);
  out << "# schema: acsee.heatmap.v1\n";
  out << "# tick: " << tick << '\n';
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      if (c) out << ',';
      out << format_double(field.at(r, c));
    }
    out << '\n';
  }
  finish(out, path);
}

void write_runs_csv(const std::string& path, const BatchResult& batch) {
  auto out = open_out(path);
  out << "# schema: acsee.runs.v1\n";
  out << "run,seed,termination_tick,reason\n";
  for (int i = 0; i < batch.n_runs; ++i) {
    out << i << ',' << batch.seeds[static_cast<std::size_t>(i)] << ','
        << batch.termination_ticks[static_cast<std::size_t>(i)] << ','
        << to_string(batch.reasons[static_cast<std::size_t>(i)]) << '\n';
  }
  finish(out, path);
}

void write_summary_csv(const std::string& path, const std::string& param,
                       const std::vector<double>& values,
                       const std::vector<BatchResult>& batches) {
  auto out = open_out(path);
  out << "# schema: acsee.sweep.v1\n";
  out << "param,value,final_active_ratio_mean,final_active_ratio_std,"
         "mean_termination_tick\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const BatchResult& b = batches[i];
    const double mean_term =
        std::accumulate(b.termination_ticks.begin(),
                        b.termination_ticks.end(), 0.0) /
        static_cast<double>(b.n_runs);
    out << param << ',' << format_double(values[i]) << ','
        << format_double(b.mean.active_ratio.back()) << ','
        << format_double(b.stddev.active_ratio.back()) << ','
        << format_double(mean_term) << '\n';
  }
  finish(out, path);
}

std::string compare_report_json(const metrics::CompareReport& report) {
  ordered_json j;
  j["schema"] = "acsee.compare.v1";
  j["entropy"] = report.entropy ? ordered_json(*report.entropy)
                                : ordered_json(nullptr);
  j["mean_ae"] = report.mean_ae ? ordered_json(*report.mean_ae)
                                : ordered_json(nullptr);
  j["idm"] = report.idm;
  j["paths_a"] = report.paths_a;
  j["paths_b"] = report.paths_b;
  j["warnings"] = report.warnings;
  return j.dump(2);
}

namespace {

ordered_json final_row_json(const Series& s) {
  ordered_json j;
  const std::size_t row = s.size() - 1;
  for (std::size_t col = 0; col < 10; ++col)
    j[kColumns[col]] = series_column(s, col, row);
  return j;
}

}  // namespace

void write_run_bundle(const std::string& dir, const ScenarioConfig& config,
                      const EngineOptions& opts, const RunResult& result) {
  ensure_dir(dir);
  const fs::path base(dir);

  write_manifest((base / "manifest.json").string(), "run", config, opts,
                 {config.seed});
  write_series_csv((base / "series.csv").string(), result.series);
  write_trace_jsonl(result.trace, (base / "trace.jsonl").string());
  for (const auto& [tick, field] : result.heatmaps)
    write_heatmap_csv(
        (base / ("heatmap_t" + std::to_string(tick) + ".csv")).string(), tick,
        field);

  const auto paths = metrics::extract_dominant_paths(
      result.trace, opts.link_radius, opts.min_group);
  ordered_json m;
  m["schema"] = "acsee.metrics.v1";
  m["termination"] = {{"tick", result.termination_tick},
                      {"reason", to_string(result.reason)}};
  m["final"] = final_row_json(result.series);
  ordered_json path_list = ordered_json::array();
  for (const auto& p : paths)
    path_list.push_back({{"role", to_string(p.role)},
                         {"ticks", p.points.size()},
                         {"members", p.members.size()}});
  m["dominant_paths"] = std::move(path_list);

  const std::string mpath = (base / "metrics.json").string();
  auto out = open_out(mpath);
  out << m.dump(2) << '\n';
  finish(out, mpath);
}

void write_batch_bundle(const std::string& dir, const ScenarioConfig& config,
                        const EngineOptions& opts, std::uint64_t base_seed,
                        const BatchResult& result) {
  ensure_dir(dir);
  const fs::path base(dir);

  ordered_json extra;
  extra["n_runs"] = result.n_runs;
  extra["base_seed"] = base_seed;
  write_manifest((base / "manifest.json").string(), "batch", config, opts,
                 result.seeds, extra);
  write_series_csv((base / "series.csv").string(), result.mean,
                   &result.stddev);
  write_runs_csv((base / "runs.csv").string(), result);

  int eliminated = 0;
  for (const Termination t : result.reasons)
    if (t == Termination::SideEliminated) ++eliminated;
  ordered_json m;
  m["schema"] = "acsee.metrics.v1";
  m["n_runs"] = result.n_runs;
  m["termination"] = {
      {"side_eliminated", eliminated},
      {"max_ticks", result.n_runs - eliminated},
      {"mean_tick",
       std::accumulate(result.termination_ticks.begin(),
                       result.termination_ticks.end(), 0.0) /
           static_cast<double>(result.n_runs)}};
  m["final_mean"] = final_row_json(result.mean);
  m["final_std"] = final_row_json(result.stddev);

  const std::string mpath = (base / "metrics.json").string();
  auto out = open_out(mpath);
  out << m.dump(2) << '\n';
  finish(out, mpath);
}

void write_sweep_bundle(const std::string& dir, const ScenarioConfig& config,
                        const EngineOptions& opts, const std::string& param,
                        const std::vector<double>& values,
                        std::uint64_t base_seed, int n_runs,
                        const std::vector<BatchResult>& results) {
  ensure_dir(dir);
  const fs::path base(dir);

  ordered_json extra;
  extra["param"] = param;
  extra["values"] = values;
  extra["n_runs"] = n_runs;
  extra["base_seed"] = base_seed;
  write_manifest((base / "manifest.json").string(), "sweep", config, opts,
                 {}, extra);
  write_summary_csv((base / "summary.csv").string(), param, values, results);

  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string sub =
        (base / (param + "_" + format_double(values[i]))).string();
    // Sub-bundle manifests carry the applied config so each is individually
    // reproducible.
    write_batch_bundle(sub, engine::apply_sweep_param(config, param, values[i]),
                       opts, base_seed, results[i]);
  }
}

}  // namespace acsee::bundle
