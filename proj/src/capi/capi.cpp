#include "acsee/acsee.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/bundle.hpp"
#include "core/engine.hpp"
#include "core/metrics.hpp"
#include "core/scenario.hpp"
#include "core/trace_io.hpp"
#include "core/types.hpp"
#include "core/version.hpp"

struct acsee_scenario {
  acsee::ScenarioConfig config;
};

struct acsee_run_result {
  acsee::RunResult result;
};

struct acsee_batch_result {
  acsee::BatchResult result;
};

namespace {

thread_local std::string g_last_error;

acsee_status map_kind(acsee::ErrorKind kind) {
  switch (kind) {
    case acsee::ErrorKind::Io: return ACSEE_ERR_IO;
    case acsee::ErrorKind::Parse: return ACSEE_ERR_PARSE;
    case acsee::ErrorKind::Validation: return ACSEE_ERR_VALIDATION;
    case acsee::ErrorKind::Capacity: return ACSEE_ERR_CAPACITY;
    case acsee::ErrorKind::Param: return ACSEE_ERR_PARAM;
    case acsee::ErrorKind::Runtime: return ACSEE_ERR_RUNTIME;
  }
  return ACSEE_ERR_RUNTIME;
}

// Exceptions never cross the C boundary.
template <typename F>
acsee_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ACSEE_OK;
  } catch (const acsee::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ACSEE_ERR_RUNTIME;
  } catch (...) {
    g_last_error = "unknown failure";
    return ACSEE_ERR_RUNTIME;
  }
}

acsee_status fail_param(const char* msg) {
  g_last_error = msg;
  return ACSEE_ERR_PARAM;
}

acsee::EngineOptions to_core(const acsee_options* opts) {
  acsee::EngineOptions out;
  if (!opts) return out;
  out.eps_bal = opts->eps_bal;
  out.p_mut = opts->p_mut;
  out.benefit_agg =
      opts->benefit_agg ? acsee::BenefitAgg::Mean : acsee::BenefitAgg::Sum;
  out.death_radius = opts->death_radius ? acsee::DeathRadius::Moore1
                                        : acsee::DeathRadius::Pr;
  out.emotion_enabled = opts->emotion_enabled != 0;
  out.heat_sigma = opts->heat_sigma;
  out.heat_every = opts->heat_every;
  out.link_radius = opts->link_radius;
  out.min_group = opts->min_group;
  out.keep_trace = opts->keep_trace != 0;
  return out;
}

const acsee::Series* series_of(const acsee_batch_result* r, int stddev) {
  return stddev ? &r->result.stddev : &r->result.mean;
}

const std::vector<double>* column_of(const acsee::Series& s,
                                     const char* name) {
  const std::string c = name ? name : "";
  if (c == "live_civilians") return &s.live_civilians;
  if (c == "live_activists") return &s.live_activists;
  if (c == "live_cops") return &s.live_cops;
  if (c == "dead_total") return &s.dead_total;
  if (c == "active_ratio") return &s.active_ratio;
  if (c == "coop_ratio_cops") return &s.coop_ratio_cops;
  if (c == "coop_ratio_activists") return &s.coop_ratio_activists;
  if (c == "mean_e_civ") return &s.mean_e_civ;
  if (c == "mean_e_act") return &s.mean_e_act;
  if (c == "mean_e_cop") return &s.mean_e_cop;
  return nullptr;
}

acsee_status copy_column(const acsee::Series& series, const char* column,
                         double* out_values, size_t capacity) {
  const std::vector<double>* col = column_of(series, column);
  if (!col) return fail_param("unknown series column");
  if (!out_values) return fail_param("out_values is null");
  if (capacity < col->size()) return fail_param("buffer too small");
  std::memcpy(out_values, col->data(), col->size() * sizeof(double));
  g_last_error.clear();
  return ACSEE_OK;
}

}  // namespace

extern "C" {

void acsee_options_init(acsee_options* opts) {
  if (!opts) return;
  const acsee::EngineOptions d;
  opts->eps_bal = d.eps_bal;
  opts->p_mut = d.p_mut;
  opts->benefit_agg = d.benefit_agg == acsee::BenefitAgg::Mean ? 1 : 0;
  opts->death_radius = d.death_radius == acsee::DeathRadius::Moore1 ? 1 : 0;
  opts->emotion_enabled = d.emotion_enabled ? 1 : 0;
  opts->heat_sigma = d.heat_sigma;
  opts->heat_every = d.heat_every;
  opts->link_radius = d.link_radius;
  opts->min_group = d.min_group;
  opts->keep_trace = d.keep_trace ? 1 : 0;
}

const char* acsee_last_error(void) { return g_last_error.c_str(); }

const char* acsee_version(void) { return acsee::kBuildVersion; }

acsee_status acsee_scenario_load(const char* path, acsee_scenario** out) {
  if (!path || !out) return fail_param("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* s = new acsee_scenario{acsee::load_scenario(path)};
    *out = s;
  });
}

acsee_status acsee_scenario_parse(const char* json_text,
                                  acsee_scenario** out) {
  if (!json_text || !out) return fail_param("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* s = new acsee_scenario{acsee::parse_scenario(json_text)};
    *out = s;
  });
}

void acsee_scenario_free(acsee_scenario* scenario) { delete scenario; }

uint64_t acsee_scenario_seed(const acsee_scenario* scenario) {
  return scenario ? scenario->config.seed : 0;
}

acsee_status acsee_scenario_set_seed(acsee_scenario* scenario,
                                     uint64_t seed) {
  if (!scenario) return fail_param("null scenario");
  scenario->config.seed = seed;
  g_last_error.clear();
  return ACSEE_OK;
}

acsee_status acsee_scenario_set_max_ticks(acsee_scenario* scenario,
                                          int max_ticks) {
  if (!scenario) return fail_param("null scenario");
  if (max_ticks <= 0) return fail_param("max_ticks must be > 0");
  scenario->config.max_ticks = max_ticks;
  g_last_error.clear();
  return ACSEE_OK;
}

acsee_status acsee_run(const acsee_scenario* scenario,
                       const acsee_options* opts, acsee_run_result** out) {
  if (!scenario || !out) return fail_param("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* r = new acsee_run_result{
        acsee::engine::run(scenario->config, to_core(opts))};
    *out = r;
  });
}

void acsee_run_result_free(acsee_run_result* result) { delete result; }

int acsee_run_termination_tick(const acsee_run_result* result) {
  return result ? result->result.termination_tick : -1;
}

int acsee_run_side_eliminated(const acsee_run_result* result) {
  if (!result) return 0;
  return result->result.reason == acsee::Termination::SideEliminated ? 1 : 0;
}

size_t acsee_run_series_length(const acsee_run_result* result) {
  return result ? result->result.series.size() : 0;
}

acsee_status acsee_run_series_column(const acsee_run_result* result,
                                     const char* column, double* out_values,
                                     size_t capacity) {
  if (!result) return fail_param("null result");
  return copy_column(result->result.series, column, out_values, capacity);
}

acsee_status acsee_batch(const acsee_scenario* scenario,
                         const acsee_options* opts, int n_runs,
                         uint64_t base_seed, int jobs,
                         acsee_batch_result** out) {
  if (!scenario || !out) return fail_param("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* r = new acsee_batch_result{acsee::engine::batch_run(
        scenario->config, to_core(opts), n_runs, base_seed, jobs)};
    *out = r;
  });
}

void acsee_batch_result_free(acsee_batch_result* result) { delete result; }

int acsee_batch_n_runs(const acsee_batch_result* result) {
  return result ? result->result.n_runs : 0;
}

size_t acsee_batch_series_length(const acsee_batch_result* result) {
  return result ? result->result.mean.size() : 0;
}

acsee_status acsee_batch_series_column(const acsee_batch_result* result,
                                       const char* column, int stddev,
                                       double* out_values, size_t capacity) {
  if (!result) return fail_param("null result");
  return copy_column(*series_of(result, stddev), column, out_values,
                     capacity);
}

acsee_status acsee_batch_run_info(const acsee_batch_result* result,
                                  int run_index, uint64_t* seed,
                                  int* termination_tick,
                                  int* side_eliminated) {
  if (!result) return fail_param("null result");
  const auto& b = result->result;
  if (run_index < 0 || run_index >= b.n_runs)
    return fail_param("run_index out of range");
  const auto i = static_cast<std::size_t>(run_index);
  if (seed) *seed = b.seeds[i];
  if (termination_tick) *termination_tick = b.termination_ticks[i];
  if (side_eliminated)
    *side_eliminated =
        b.reasons[i] == acsee::Termination::SideEliminated ? 1 : 0;
  g_last_error.clear();
  return ACSEE_OK;
}

acsee_status acsee_write_run_bundle(const acsee_scenario* scenario,
                                    const acsee_options* opts,
                                    const acsee_run_result* result,
                                    const char* out_dir) {
  if (!scenario || !result || !out_dir) return fail_param("null argument");
  return guarded([&] {
    acsee::bundle::write_run_bundle(out_dir, scenario->config, to_core(opts),
                                    result->result);
  });
}

acsee_status acsee_write_batch_bundle(const acsee_scenario* scenario,
                                      const acsee_options* opts,
                                      uint64_t base_seed,
                                      const acsee_batch_result* result,
                                      const char* out_dir) {
  if (!scenario || !result || !out_dir) return fail_param("null argument");
  return guarded([&] {
    acsee::bundle::write_batch_bundle(out_dir, scenario->config,
                                      to_core(opts), base_seed,
                                      result->result);
  });
}

acsee_status acsee_sweep_and_write(const acsee_scenario* scenario,
                                   const acsee_options* opts,
                                   const char* param, const double* values,
                                   size_t n_values, int n_runs,
                                   uint64_t base_seed, int jobs,
                                   const char* out_dir) {
  if (!scenario || !param || !values || !out_dir)
    return fail_param("null argument");
  if (n_values == 0) return fail_param("no sweep values");
  return guarded([&] {
    const std::vector<double> vals(values, values + n_values);
    const auto results =
        acsee::engine::sweep(scenario->config, to_core(opts), param, vals,
                             n_runs, base_seed, jobs);
    acsee::bundle::write_sweep_bundle(out_dir, scenario->config,
                                      to_core(opts), param, vals, base_seed,
                                      n_runs, results);
  });
}

acsee_status acsee_compare_traces(const char* trace_path_a,
                                  const char* trace_path_b,
                                  double link_radius, int min_group,
                                  char** out_json) {
  if (!trace_path_a || !trace_path_b || !out_json)
    return fail_param("null argument");
  *out_json = nullptr;
  return guarded([&] {
    const auto a = acsee::read_trace_jsonl(trace_path_a);
    const auto b = acsee::read_trace_jsonl(trace_path_b);
    const auto report =
        acsee::metrics::compare_traces(a, b, link_radius, min_group);
    const std::string json = acsee::bundle::compare_report_json(report);
    char* buf = static_cast<char*>(std::malloc(json.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, json.c_str(), json.size() + 1);
    *out_json = buf;
  });
}

void acsee_string_free(char* str) { std::free(str); }

}  // extern "C"
