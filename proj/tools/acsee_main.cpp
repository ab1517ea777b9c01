// Command-line front end for the acsee simulation library. Talks to the
// engine exclusively through the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acsee/acsee.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Input-stage failures (unreadable/invalid scenario, bad parameters) are
// usage errors; failures after inputs were accepted are runtime errors.
int exit_code(acsee_status status, bool input_stage) {
  if (status == ACSEE_OK) return kExitOk;
  if (input_stage) return kExitUsage;
  switch (status) {
    case ACSEE_ERR_VALIDATION:
    case ACSEE_ERR_CAPACITY:
    case ACSEE_ERR_PARAM:
    case ACSEE_ERR_PARSE:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

int complain(acsee_status status, bool input_stage) {
  std::cerr << "error: " << acsee_last_error() << "\n";
  return exit_code(status, input_stage);
}

struct ScenarioDeleter {
  void operator()(acsee_scenario* s) const { acsee_scenario_free(s); }
};
using ScenarioPtr = std::unique_ptr<acsee_scenario, ScenarioDeleter>;

struct EngineFlags {
  acsee_options opts{};
  bool no_emotion = false;
  bool no_trace = false;
  std::string benefit_agg = "sum";
  std::string death_radius = "pr";

  void attach(CLI::App* cmd) {
    acsee_options_init(&opts);
    cmd->add_option("--eps-bal", opts.eps_bal,
                    "Force-difference tolerance treated as balanced")
        ->capture_default_str();
    cmd->add_option("--p-mut", opts.p_mut,
                    "Per-bit strategy mutation probability")
        ->capture_default_str();
    cmd->add_option("--benefit-agg", benefit_agg,
                    "Aggregate payoffs over opponents: sum|mean")
        ->check(CLI::IsMember({"sum", "mean"}))
        ->capture_default_str();
    cmd->add_option("--death-radius", death_radius,
                    "Force radius for subdual: pr|moore1")
        ->check(CLI::IsMember({"pr", "moore1"}))
        ->capture_default_str();
    cmd->add_flag("--no-emotion", no_emotion,
                  "Freeze all emotions (ablation)");
    cmd->add_option("--heat-sigma", opts.heat_sigma,
                    "Heat-map Gaussian width in cells")
        ->capture_default_str();
    cmd->add_option("--heat-every", opts.heat_every,
                    "Heat-map cadence in ticks (0 disables)")
        ->capture_default_str();
    cmd->add_option("--link-radius", opts.link_radius,
                    "Cluster link distance for dominant paths")
        ->capture_default_str();
    cmd->add_option("--min-group", opts.min_group,
                    "Minimum cluster size for a dominant path")
        ->capture_default_str();
  }

  const acsee_options* resolve() {
    opts.benefit_agg = benefit_agg == "mean" ? 1 : 0;
    opts.death_radius = death_radius == "moore1" ? 1 : 0;
    if (no_emotion) opts.emotion_enabled = 0;
    if (no_trace) opts.keep_trace = 0;
    return &opts;
  }
};

ScenarioPtr load_scenario_or_null(const std::string& path,
                                  acsee_status* status) {
  acsee_scenario* raw = nullptr;
  *status = acsee_scenario_load(path.c_str(), &raw);
  return ScenarioPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "acsee — deterministic simulator of antagonistic crowds (civilians, "
      "activists, cops) on a cell grid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(acsee_version()));

  // --- run ---
  auto* run_cmd = app.add_subcommand(
      "run", "Simulate one scenario and write a full output bundle");
  std::string run_scenario, run_out;
  std::uint64_t run_seed = 0;
  int run_max_ticks = 0;
  run_cmd->add_option("--scenario", run_scenario, "Scenario JSON file")
      ->required();
  run_cmd->add_option("--out", run_out, "Output directory")->required();
  auto* run_seed_opt =
      run_cmd->add_option("--seed", run_seed, "Override the scenario seed");
  auto* run_ticks_opt = run_cmd->add_option(
      "--max-ticks", run_max_ticks, "Override the scenario tick limit");
  EngineFlags run_flags;
  run_flags.attach(run_cmd);
  run_cmd->add_flag("--no-trace", run_flags.no_trace,
                    "Skip trace and heat-map output");

  // --- batch ---
  auto* batch_cmd = app.add_subcommand(
      "batch", "Average many seeded runs of one scenario");
  std::string batch_scenario, batch_out;
  int batch_runs = 0;
  std::uint64_t batch_base_seed = 0;
  int batch_jobs = 1;
  int batch_max_ticks = 0;
  batch_cmd->add_option("--scenario", batch_scenario, "Scenario JSON file")
      ->required();
  batch_cmd->add_option("--out", batch_out, "Output directory")->required();
  batch_cmd->add_option("--runs", batch_runs, "Number of runs")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* base_seed_opt = batch_cmd->add_option(
      "--base-seed", batch_base_seed,
      "First run's seed; run i uses base-seed + i (default: scenario seed)");
  batch_cmd->add_option("--jobs", batch_jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* batch_ticks_opt = batch_cmd->add_option(
      "--max-ticks", batch_max_ticks, "Override the scenario tick limit");
  EngineFlags batch_flags;
  batch_flags.attach(batch_cmd);

  // --- sweep ---
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Batch one scenario across values of a parameter");
  std::string sweep_scenario, sweep_out, sweep_param;
  std::vector<double> sweep_values;
  int sweep_runs = 0;
  std::uint64_t sweep_base_seed = 0;
  int sweep_jobs = 1;
  int sweep_max_ticks = 0;
  sweep_cmd->add_option("--scenario", sweep_scenario, "Scenario JSON file")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "Output directory")->required();
  sweep_cmd->add_option("--param", sweep_param,
                        "Parameter to sweep: n_cops, pr, a, b")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--runs", sweep_runs, "Runs per value")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* sweep_seed_opt = sweep_cmd->add_option(
      "--base-seed", sweep_base_seed,
      "First run's seed per batch (default: scenario seed)");
  sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* sweep_ticks_opt = sweep_cmd->add_option(
      "--max-ticks", sweep_max_ticks, "Override the scenario tick limit");
  EngineFlags sweep_flags;
  sweep_flags.attach(sweep_cmd);

  // --- compare ---
  auto* cmp_cmd = app.add_subcommand(
      "compare", "Movement-similarity metrics between two trace files");
  std::string cmp_a, cmp_b, cmp_out;
  double cmp_link_radius = 2.0;
  int cmp_min_group = 3;
  cmp_cmd->add_option("trace_a", cmp_a, "First trace (JSON lines)")
      ->required();
  cmp_cmd->add_option("trace_b", cmp_b, "Second trace (JSON lines)")
      ->required();
  cmp_cmd->add_option("--link-radius", cmp_link_radius,
                      "Cluster link distance")
      ->capture_default_str();
  cmp_cmd->add_option("--min-group", cmp_min_group, "Minimum cluster size")
      ->capture_default_str();
  cmp_cmd->add_option("--out", cmp_out,
                      "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return kExitUsage;
  }

  if (run_cmd->parsed()) {
    acsee_status st;
    ScenarioPtr scenario = load_scenario_or_null(run_scenario, &st);
    if (!scenario) return complain(st, true);
    if (*run_seed_opt) acsee_scenario_set_seed(scenario.get(), run_seed);
    if (*run_ticks_opt) {
      st = acsee_scenario_set_max_ticks(scenario.get(), run_max_ticks);
      if (st != ACSEE_OK) return complain(st, true);
    }

    acsee_run_result* result = nullptr;
    st = acsee_run(scenario.get(), run_flags.resolve(), &result);
    if (st != ACSEE_OK) return complain(st, false);
    st = acsee_write_run_bundle(scenario.get(), run_flags.resolve(), result,
                                run_out.c_str());
    const int tick = acsee_run_termination_tick(result);
    const bool eliminated = acsee_run_side_eliminated(result) != 0;
    acsee_run_result_free(result);
    if (st != ACSEE_OK) return complain(st, false);
    std::cout << "wrote " << run_out << " (tick " << tick << ", "
              << (eliminated ? "side eliminated" : "tick limit") << ")\n";
    return kExitOk;
  }

  if (batch_cmd->parsed()) {
    acsee_status st;
    ScenarioPtr scenario = load_scenario_or_null(batch_scenario, &st);
    if (!scenario) return complain(st, true);
    if (*batch_ticks_opt) {
      st = acsee_scenario_set_max_ticks(scenario.get(), batch_max_ticks);
      if (st != ACSEE_OK) return complain(st, true);
    }
    if (!*base_seed_opt)
      batch_base_seed = acsee_scenario_seed(scenario.get());

    acsee_batch_result* result = nullptr;
    st = acsee_batch(scenario.get(), batch_flags.resolve(), batch_runs,
                     batch_base_seed, batch_jobs, &result);
    if (st != ACSEE_OK) return complain(st, false);
    st = acsee_write_batch_bundle(scenario.get(), batch_flags.resolve(),
                                  batch_base_seed, result,
                                  batch_out.c_str());
    acsee_batch_result_free(result);
    if (st != ACSEE_OK) return complain(st, false);
    std::cout << "wrote " << batch_out << " (" << batch_runs << " runs)\n";
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    acsee_status st;
    ScenarioPtr scenario = load_scenario_or_null(sweep_scenario, &st);
    if (!scenario) return complain(st, true);
    if (*sweep_ticks_opt) {
      st = acsee_scenario_set_max_ticks(scenario.get(), sweep_max_ticks);
      if (st != ACSEE_OK) return complain(st, true);
    }
    if (!*sweep_seed_opt)
      sweep_base_seed = acsee_scenario_seed(scenario.get());

    st = acsee_sweep_and_write(scenario.get(), sweep_flags.resolve(),
                               sweep_param.c_str(), sweep_values.data(),
                               sweep_values.size(), sweep_runs,
                               sweep_base_seed, sweep_jobs,
                               sweep_out.c_str());
    if (st != ACSEE_OK)
      return complain(st, st == ACSEE_ERR_PARAM || st == ACSEE_ERR_VALIDATION);
    std::cout << "wrote " << sweep_out << " (" << sweep_values.size()
              << " values x " << sweep_runs << " runs)\n";
    return kExitOk;
  }

  // compare
  char* json = nullptr;
  acsee_status st = acsee_compare_traces(cmp_a.c_str(), cmp_b.c_str(),
                                         cmp_link_radius, cmp_min_group,
                                         &json);
  if (st != ACSEE_OK) return complain(st, true);
  if (cmp_out.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(cmp_out, std::ios::binary);
    out << json << "\n";
    const bool ok = static_cast<bool>(out);
    if (!ok) {
      acsee_string_free(json);
      std::cerr << "error: cannot write " << cmp_out << "\n";
      return kExitRuntime;
    }
  }
  acsee_string_free(json);
  return kExitOk;
}
