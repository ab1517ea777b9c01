#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/metrics.hpp"
#include "core/types.hpp"

namespace acsee::bundle {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

void write_series_csv(const std::string& path, const Series& series,
                      const Series* stddev = nullptr);
void write_heatmap_csv(const std::string& path, int tick,
                       const HeatField& field);
void write_runs_csv(const std::string& path, const BatchResult& batch);
void write_summary_csv(const std::string& path, const std::string& param,
                       const std::vector<double>& values,
                       const std::vector<BatchResult>& batches);

std::string compare_report_json(const metrics::CompareReport& report);

// Single-run bundle: manifest.json, series.csv, trace.jsonl, metrics.json,
// heatmap_t<tick>.csv per sampled tick.
void write_run_bundle(const std::string& dir, const ScenarioConfig& config,
                      const EngineOptions& opts, const RunResult& result);

// Batch bundle: manifest.json, series.csv (with _std columns), runs.csv,
// metrics.json.
void write_batch_bundle(const std::string& dir, const ScenarioConfig& config,
                        const EngineOptions& opts, std::uint64_t base_seed,
                        const BatchResult& result);

// Sweep bundle: manifest.json, summary.csv, one batch bundle per value in
// <param>_<value>/ subdirectories.
void write_sweep_bundle(const std::string& dir, const ScenarioConfig& config,
                        const EngineOptions& opts, const std::string& param,
                        const std::vector<double>& values,
                        std::uint64_t base_seed, int n_runs,
                        const std::vector<BatchResult>& results);

}  // namespace acsee::bundle
