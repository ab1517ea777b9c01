#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/game.hpp"
#include "core/rng.hpp"
#include "core/types.hpp"

namespace acsee::engine {

// Per-agent view derived from the current state: deterrent forces and
// (for live cops/activists) the perceived situation. Civilians and the dead
// carry zero force and a Balanced placeholder.
struct Observation {
  std::vector<double> force;
  std::vector<game::Situation> situation;
};

Observation observe(const SimState& state, const EngineOptions& opts);

// Advances one tick through the five phases, in order: emotion -> game ->
// strategy evolution -> movement -> death. Each phase reads the state the
// previous one left behind; computations inside a phase see a consistent
// snapshot. Requires at least one live agent.
void step(SimState& state, Rng& rng, const EngineOptions& opts);

// Runs a full simulation from config.seed: records tick 0, then steps until
// either side (cops or activists) is gone or max_ticks is reached.
RunResult run(const ScenarioConfig& config, const EngineOptions& opts);

// n_runs independent runs with seeds base_seed + 0 .. base_seed + n-1,
// optionally spread over `jobs` worker threads. Early-terminated runs hold
// their last row when averaging. The result is bit-identical for any jobs
// value: aggregation always happens in run-index order.
BatchResult batch_run(const ScenarioConfig& config, const EngineOptions& opts,
                      int n_runs, std::uint64_t base_seed, int jobs = 1);

// Valid sweepable parameter names: n_cops, pr, a, b.
ScenarioConfig apply_sweep_param(const ScenarioConfig& config,
                                 const std::string& name, double value);

std::vector<BatchResult> sweep(const ScenarioConfig& config,
                               const EngineOptions& opts,
                               const std::string& name,
                               const std::vector<double>& values, int n_runs,
                               std::uint64_t base_seed, int jobs = 1);

}  // namespace acsee::engine
