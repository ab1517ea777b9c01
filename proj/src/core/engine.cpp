#include "core/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "core/behavior.hpp"
#include "core/emotion.hpp"
#include "core/metrics.hpp"
#include "core/scenario.hpp"

namespace acsee::engine {

namespace {

void emotion_phase(SimState& state, Rng& rng) {
  const std::size_t n = state.agents.size();
  // Both increments are computed against the tick-start snapshot for every
  // agent before anything is applied, so contagion is order-independent.
  std::vector<double> delta(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& a = state.agents[i];
    if (!a.alive) continue;
    const double ext = emotion::external_increment(state, static_cast<int>(i));
    const double me = emotion::mental_increment(a.role, state.dbene[i],
                                                state.config.delta, rng);
    delta[i] = ext + me;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Agent& a = state.agents[i];
    if (!a.alive) continue;
    a.emotion = emotion::update_emotion(a.emotion, delta[i]);
  }
  for (Agent& a : state.agents)
    if (a.alive) emotion::apply_role_transition(a, state.config);
}

struct GamePhase {
  std::vector<double> force;
  std::vector<game::Situation> situation;
  std::vector<double> benefit;
};

GamePhase game_phase(SimState& state, const EngineOptions& opts) {
  GamePhase g;
  const std::size_t n = state.agents.size();
  g.force = game::force_table(state);
  g.situation.assign(n, game::Situation{});
  g.benefit.assign(n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const Agent& a = state.agents[i];
    if (!a.alive || a.role == Role::Civilian) continue;
    const game::Forces f = game::total_forces(state, g.force,
                                              static_cast<int>(i),
                                              state.config.pr);
    g.situation[i] = game::classify(f.same, f.opposing, opts.eps_bal);
    g.benefit[i] = game::round_benefit(state, static_cast<int>(i),
                                       g.situation[i], opts.benefit_agg);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Agent& a = state.agents[i];
    if (!a.alive || a.role == Role::Civilian) continue;
    a.benefit_prev = a.benefit_cur;
    a.benefit_cur = g.benefit[i];
    state.dbene[i] = a.benefit_cur - a.benefit_prev;
  }
  return g;
}

void movement_phase(SimState& state, const GamePhase& g,
                    const EngineOptions& opts, Rng& rng) {
  std::vector<behavior::MoveDecision> decisions;
  decisions.reserve(state.agents.size());
  for (const Agent& a : state.agents) {
    if (!a.alive) continue;
    decisions.push_back(behavior::choose_move(state, g.force, g.situation,
                                              a.id, opts, rng));
  }
  behavior::commit_moves(state, decisions, rng);
}

void death_phase(SimState& state, const GamePhase& g,
                 const EngineOptions& opts) {
  const std::size_t n = state.agents.size();
  // All probabilities come from the same post-movement snapshot; deaths are
  // applied afterwards so nobody's demise shields a neighbor mid-phase.
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& a = state.agents[i];
    if (!a.alive || a.role == Role::Civilian) continue;
    p[i] = behavior::death_probability(state, g.force, static_cast<int>(i),
                                       opts);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Agent& a = state.agents[i];
    if (!a.alive || a.role == Role::Civilian) continue;
    if (behavior::update_warning(a, p[i])) state.grid.remove(a.pos);
  }
}

}  // namespace

Observation observe(const SimState& state, const EngineOptions& opts) {
  Observation obs;
  const std::size_t n = state.agents.size();
  obs.force = game::force_table(state);
  obs.situation.assign(n, game::Situation{});
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& a = state.agents[i];
    if (!a.alive || a.role == Role::Civilian) continue;
    const game::Forces f = game::total_forces(state, obs.force,
                                              static_cast<int>(i),
                                              state.config.pr);
    obs.situation[i] = game::classify(f.same, f.opposing, opts.eps_bal);
  }
  return obs;
}

void step(SimState& state, Rng& rng, const EngineOptions& opts) {
  if (opts.emotion_enabled) emotion_phase(state, rng);
  const GamePhase g = game_phase(state, opts);
  game::evolve_strategies(state, g.benefit, g.situation, rng, opts.p_mut);
  movement_phase(state, g, opts, rng);
  death_phase(state, g, opts);
  state.tick += 1;
}

namespace {

TickSnapshot make_snapshot(const SimState& state, const Observation& obs) {
  TickSnapshot snap;
  snap.tick = state.tick;
  snap.agents.reserve(state.agents.size());
  for (const Agent& a : state.agents) {
    AgentSnapshot s;
    s.id = a.id;
    s.role = a.role;
    s.pos = a.pos;
    s.alive = a.alive;
    s.emotion = a.emotion;
    s.force = obs.force[static_cast<std::size_t>(a.id)];
    if (a.alive && a.role != Role::Civilian)
      s.strategy = a.chromosome.at(
          obs.situation[static_cast<std::size_t>(a.id)].kind);
    snap.agents.push_back(s);
  }
  return snap;
}

void append_series_row(Series& series, const SimState& state,
                       const Observation& obs) {
  const int civ = state.live_count(Role::Civilian);
  const int act = state.live_count(Role::Activist);
  const int cop = state.live_count(Role::Cop);
  int dead = 0;
  for (const Agent& a : state.agents)
    if (!a.alive) ++dead;

  series.tick.push_back(state.tick);
  series.live_civilians.push_back(civ);
  series.live_activists.push_back(act);
  series.live_cops.push_back(cop);
  series.dead_total.push_back(dead);
  series.active_ratio.push_back(metrics::active_ratio(state));
  series.coop_ratio_cops.push_back(
      metrics::cooperation_ratio(state, obs.situation, Role::Cop));
  series.coop_ratio_activists.push_back(
      metrics::cooperation_ratio(state, obs.situation, Role::Activist));

  double sum[3] = {0, 0, 0};
  int cnt[3] = {0, 0, 0};
  for (const Agent& a : state.agents) {
    if (!a.alive) continue;
    sum[static_cast<int>(a.role)] += a.emotion;
    ++cnt[static_cast<int>(a.role)];
  }
  auto mean = [&](Role r) {
    const int k = static_cast<int>(r);
    return cnt[k] > 0 ? sum[k] / cnt[k] : 0.0;
  };
  series.mean_e_civ.push_back(mean(Role::Civilian));
  series.mean_e_act.push_back(mean(Role::Activist));
  series.mean_e_cop.push_back(mean(Role::Cop));
}

void record(const SimState& state, const EngineOptions& opts,
            RunResult& out) {
  const Observation obs = observe(state, opts);
  append_series_row(out.series, state, obs);
  if (opts.keep_trace) {
    out.trace.ticks.push_back(make_snapshot(state, obs));
    if (opts.heat_every > 0 && state.tick % opts.heat_every == 0)
      out.heatmaps.emplace_back(
          state.tick, metrics::emotion_heatmap(state, opts.heat_sigma));
  }
}

}  // namespace

RunResult run(const ScenarioConfig& config, const EngineOptions& opts) {
  Rng rng(config.seed);
  SimState state = init_state(config, rng);

  RunResult out;
  out.trace.rows = config.rows;
  out.trace.cols = config.cols;
  out.trace.seed = config.seed;

  record(state, opts, out);

  out.termination_tick = 0;
  out.reason = Termination::MaxTicks;
  if (state.agents.empty()) {
    out.reason = Termination::SideEliminated;
    return out;
  }

  while (true) {
    step(state, rng, opts);
    record(state, opts, out);
    out.termination_tick = state.tick;
    if (state.live_count(Role::Activist) == 0 ||
        state.live_count(Role::Cop) == 0) {
      out.reason = Termination::SideEliminated;
      break;
    }
    if (state.tick >= config.max_ticks) {
      out.reason = Termination::MaxTicks;
      break;
    }
  }

  if (opts.keep_trace && opts.heat_every > 0 &&
      (out.heatmaps.empty() || out.heatmaps.back().first != state.tick))
    out.heatmaps.emplace_back(
        state.tick, metrics::emotion_heatmap(state, opts.heat_sigma));
  return out;
}

namespace {

double column_value(const Series& s, std::size_t col, std::size_t row) {
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

void push_column(Series& s, std::size_t col, double v) {
  switch (col) {
    case 0: s.live_civilians.push_back(v); break;
    case 1: s.live_activists.push_back(v); break;
    case 2: s.live_cops.push_back(v); break;
    case 3: s.dead_total.push_back(v); break;
    case 4: s.active_ratio.push_back(v); break;
    case 5: s.coop_ratio_cops.push_back(v); break;
    case 6: s.coop_ratio_activists.push_back(v); break;
    case 7: s.mean_e_civ.push_back(v); break;
    case 8: s.mean_e_act.push_back(v); break;
    default: s.mean_e_cop.push_back(v); break;
  }
}

constexpr std::size_t kSeriesColumns = 10;

}  // namespace

BatchResult batch_run(const ScenarioConfig& config, const EngineOptions& opts,
                      int n_runs, std::uint64_t base_seed, int jobs) {
  if (n_runs < 1) throw Error(ErrorKind::Param, "n_runs must be >= 1");
  if (jobs < 1) jobs = 1;

  EngineOptions run_opts = opts;
  run_opts.keep_trace = false;  // batches keep series only

  std::vector<RunResult> results(static_cast<std::size_t>(n_runs));
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= n_runs) break;
      ScenarioConfig cfg = config;
      cfg.seed = base_seed + static_cast<std::uint64_t>(i);
      results[static_cast<std::size_t>(i)] = run(cfg, run_opts);
    }
  };

  if (jobs == 1 || n_runs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, n_runs);
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BatchResult out;
  out.n_runs = n_runs;
  out.seeds.reserve(static_cast<std::size_t>(n_runs));
  for (int i = 0; i < n_runs; ++i) {
    out.seeds.push_back(base_seed + static_cast<std::uint64_t>(i));
    out.termination_ticks.push_back(results[i].termination_tick);
    out.reasons.push_back(results[i].reason);
  }

  std::size_t len = 0;
  for (const RunResult& r : results) len = std::max(len, r.series.size());

  // Mean/stddev per tick in run-index order; early finishers hold their
  // final row. Fixed summation order keeps results independent of jobs.
  for (std::size_t row = 0; row < len; ++row) {
    out.mean.tick.push_back(static_cast<int>(row));
    out.stddev.tick.push_back(static_cast<int>(row));
    for (std::size_t col = 0; col < kSeriesColumns; ++col) {
      double sum = 0.0;
      for (const RunResult& r : results) {
        const std::size_t k = std::min(row, r.series.size() - 1);
        sum += column_value(r.series, col, k);
      }
      const double mean = sum / n_runs;
      double var = 0.0;
      for (const RunResult& r : results) {
        const std::size_t k = std::min(row, r.series.size() - 1);
        const double d = column_value(r.series, col, k) - mean;
        var += d * d;
      }
      push_column(out.mean, col, mean);
      push_column(out.stddev, col, std::sqrt(var / n_runs));
    }
  }
  return out;
}

ScenarioConfig apply_sweep_param(const ScenarioConfig& config,
                                 const std::string& name, double value) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) key.push_back(static_cast<char>(std::tolower(c)));
  if (key == "a_global") key = "a";
  if (key == "b_global") key = "b";

  ScenarioConfig out = config;
  if (key == "n_cops") {
    if (value < 0 || value != std::floor(value))
      throw Error(ErrorKind::Param, "n_cops must be a nonnegative integer");
    out.n_cops = static_cast<int>(value);
  } else if (key == "pr") {
    out.pr = value;
  } else if (key == "a") {
    out.a = value;
  } else if (key == "b") {
    out.b = value;
  } else {
    throw Error(ErrorKind::Param, "unknown sweep parameter '" + name +
                                      "'; valid: n_cops, pr, a, b");
  }
  out.validate();
  return out;
}

std::vector<BatchResult> sweep(const ScenarioConfig& config,
                               const EngineOptions& opts,
                               const std::string& name,
                               const std::vector<double>& values, int n_runs,
                               std::uint64_t base_seed, int jobs) {
  if (values.empty())
    throw Error(ErrorKind::Param, "sweep needs at least one value");
  std::vector<BatchResult> out;
  out.reserve(values.size());
  for (const double v : values)
    out.push_back(batch_run(apply_sweep_param(config, name, v), opts, n_runs,
                            base_seed, jobs));
  return out;
}

}  // namespace acsee::engine
