// Release-gate harness: ten numbered end-to-end checks against the built
// core library. Each check prints exactly one line
//
//   C<n> PASS — <measurements>
//   C<n> FAIL — <measurements>
//
// and the process exits 0 only when every selected check passed. Run with a
// single argument (1..10) to execute one check, or with no arguments to
// execute all ten in order.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/behavior.hpp"
#include "core/bundle.hpp"
#include "core/emotion.hpp"
#include "core/engine.hpp"
#include "core/game.hpp"
#include "core/metrics.hpp"
#include "core/rng.hpp"
#include "core/scenario.hpp"
#include "core/types.hpp"

namespace {

namespace fs = std::filesystem;
using acsee::Agent;
using acsee::BatchResult;
using acsee::Cell;
using acsee::EngineOptions;
using acsee::Role;
using acsee::RunResult;
using acsee::ScenarioConfig;
using acsee::SimState;
using acsee::SituationKind;
using acsee::Strategy;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  }
};

std::string scenario_path(const char* name) {
  return std::string(ACSEE_SCENARIO_DIR) + "/" + name;
}

// Options for bulk statistics runs: no traces, no heat fields. Neither
// switch feeds back into the dynamics; they only trim recording cost.
EngineOptions bulk_options() {
  EngineOptions opts;
  opts.keep_trace = false;
  opts.heat_every = 0;
  return opts;
}

std::string num(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string secs(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

// Ranks with ties replaced by the average of the tied positions (1-based).
std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(average_ranks(x), average_ranks(y));
}

// One-sided sign test: P(X >= k) for X ~ Binomial(n, 1/2).
double sign_test_p(int n, int k) {
  double tail = 0.0;
  for (int i = k; i <= n; ++i) {
    double c = 1.0;
    for (int j = 0; j < i; ++j)
      c = c * static_cast<double>(n - j) / static_cast<double>(j + 1);
    tail += c;
  }
  return tail / std::pow(2.0, n);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string make_temp_dir(const char* tag) {
  std::string tmpl = std::string("/tmp/acsee_accept_") + tag + "_XXXXXX";
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (::mkdtemp(buf.data()) == nullptr)
    throw std::runtime_error("mkdtemp failed");
  return std::string(buf.data());
}

// ---------------------------------------------------------------------------
// C1: equal opposing and same-side force gives a 0.9 death probability.

Outcome c1() {
  const double forces[] = {0.0625, 0.25, 0.5, 1.0, 1.5, 2.0, 3.75, 10.0};
  double worst = 0.0;
  for (double f : forces) {
    const double p = acsee::behavior::death_probability_from_forces(f, f);
    worst = std::max(worst, std::abs(p - 0.9));
  }
  Outcome out;
  out.pass = worst <= 1e-12;
  out.detail = "equal-force death probability off by at most " + num(worst, 3) +
               " across 8 magnitudes (tolerance 1e-12)";
  return out;
}

// ---------------------------------------------------------------------------
// C2: every benefit-matrix entry matches the published table exactly.

Outcome c2() {
  struct Entry {
    SituationKind kind;
    Strategy cop;
    Strategy act;
    double pay_cop;
    double pay_act;
  };
  const Strategy C = Strategy::Cooperation;
  const Strategy D = Strategy::Defection;
  const Entry table[] = {
      {SituationKind::DeltaPositive, C, C, 1.0, 4.0},
      {SituationKind::DeltaPositive, C, D, 2.0, 2.0},
      {SituationKind::DeltaPositive, D, C, 3.0, 3.0},
      {SituationKind::DeltaPositive, D, D, 4.0, 1.0},
      {SituationKind::Balanced, C, C, 3.0, 3.0},
      {SituationKind::Balanced, C, D, 0.0, 5.0},
      {SituationKind::Balanced, D, C, 5.0, 0.0},
      {SituationKind::Balanced, D, D, 1.0, 1.0},
      {SituationKind::DeltaNegative, C, C, 4.0, 1.0},
      {SituationKind::DeltaNegative, C, D, 3.0, 3.0},
      {SituationKind::DeltaNegative, D, C, 2.0, 2.0},
      {SituationKind::DeltaNegative, D, D, 1.0, 4.0},
  };
  int exact = 0;
  for (const Entry& e : table) {
    const auto [pc, pa] = acsee::game::payoff(e.kind, e.cop, e.act);
    if (pc == e.pay_cop && pa == e.pay_act) ++exact;
  }
  Outcome out;
  out.pass = exact == 12;
  out.detail = std::to_string(exact) +
               "/12 benefit cells exact (both payoffs per cell)";
  return out;
}

// ---------------------------------------------------------------------------
// C3: pairwise contagion, benefit-coupled increment, and deterrent force
// against independent extended-precision re-derivations, 1000 random inputs
// each, within 1e-9 relative error.

Outcome c3() {
  const long double pi_l = std::acos(-1.0L);
  std::mt19937_64 gen(0xC3C3C3C3ULL);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  auto rel_err = [](double got, long double want) {
    return static_cast<double>(std::fabs(static_cast<long double>(got) - want) /
                               std::fabs(want));
  };

  double worst_pair = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double sign = (gen() & 1u) ? 1.0 : -1.0;
    const double e = sign * (0.001 + 0.998 * u01(gen));
    const double d = 30.0 * u01(gen);
    const double a = 0.05 + 0.95 * u01(gen);
    const double b = 0.05 + 0.95 * u01(gen);
    const double got = acsee::emotion::pairwise_external_delta(e, d, a, b);
    const long double want = static_cast<long double>(e) * a * b /
                             (1.0L + std::exp(static_cast<long double>(d)));
    worst_pair = std::max(worst_pair, rel_err(got, want));
  }

  acsee::Rng dummy(1);  // the randomized dead-zone branch is never entered
  double worst_mental = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Role role = (gen() & 1u) ? Role::Activist : Role::Cop;
    const double delta = 0.01 + 0.99 * u01(gen);
    const double magnitude = delta * (1.0 + 9.0 * u01(gen));
    const double dbene = (gen() & 1u) ? magnitude : -magnitude;
    const double got = acsee::emotion::mental_increment(role, dbene, delta,
                                                        dummy);
    const long double dl = delta;
    const long double bl = dbene;
    long double want = dbene > 0.0 ? 0.1L / (dl + std::exp(dl / bl))
                                   : -0.1L / (dl + std::exp(bl / dl));
    if (role == Role::Activist) want = -want;
    worst_mental = std::max(worst_mental, rel_err(got, want));
  }

  double worst_force = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double sign = (gen() & 1u) ? 1.0 : -1.0;
    const double e = sign * (1e-6 + (0.999 - 1e-6) * u01(gen));
    const double got = acsee::game::deterrent_force(e);
    const long double want =
        std::sin(std::fabs(static_cast<long double>(e)) * pi_l / 2.0L);
    worst_force = std::max(worst_force, rel_err(got, want));
  }

  Outcome out;
  const double tol = 1e-9;
  out.pass =
      worst_pair <= tol && worst_mental <= tol && worst_force <= tol;
  out.detail = "worst relative error over 1000 cases each: contagion " +
               num(worst_pair, 3) + ", benefit increment " +
               num(worst_mental, 3) + ", force " + num(worst_force, 3) +
               " (tolerance 1e-9)";
  return out;
}

// ---------------------------------------------------------------------------
// C4: five randomized invariant suites, at least 10,000 cases each.

Outcome c4() {
  std::mt19937_64 gen(0xC4C4C4C4ULL);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto valid_emotion = [&]() {
    const double sign = (gen() & 1u) ? 1.0 : -1.0;
    return sign * (1e-6 + (0.999 - 1e-6) * u01(gen));
  };

  // Suite 1: the emotion update lands in [-0.999, 0.999] and is never 0.
  int emotion_cases = 0, emotion_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const double e = acsee::emotion::update_emotion(
        valid_emotion(), -2.0 + 4.0 * u01(gen));
    ++emotion_cases;
    if (!(std::abs(e) <= 0.999) || e == 0.0) ++emotion_bad;
  }

  // Suite 2: deterrent force lies in [0, 1).
  int force_cases = 0, force_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const double f = acsee::game::deterrent_force(valid_emotion());
    ++force_cases;
    if (!(f >= 0.0 && f < 1.0)) ++force_bad;
  }

  // Suites 3 + 4: after every tick of randomized simulations, live agents
  // and occupied cells are in bijection, and alive + dead partitions the
  // full population with no dead civilians.
  const EngineOptions opts = bulk_options();
  int tick_cases = 0, occupancy_bad = 0, conservation_bad = 0;
  int config_index = 0;
  while (tick_cases < 10000) {
    ScenarioConfig cfg;
    cfg.rows = 18;
    cfg.cols = 18;
    cfg.n_civilians = 10 + static_cast<int>(gen() % 31);
    cfg.n_activists = 5 + static_cast<int>(gen() % 21);
    cfg.n_cops = 5 + static_cast<int>(gen() % 21);
    cfg.emotion_civilian = 0.1;
    cfg.emotion_activist = -0.5;
    cfg.emotion_cop = 0.5;
    cfg.pr = 10.0;
    cfg.a = 0.8;
    cfg.b = 0.1;
    cfg.max_ticks = 80;
    cfg.seed = 5000 + static_cast<std::uint64_t>(config_index++);
    cfg.validate();

    acsee::Rng rng(cfg.seed);
    SimState state = acsee::init_state(cfg, rng);
    const int total = cfg.total_agents();
    for (int t = 0; t < cfg.max_ticks; ++t) {
      acsee::engine::step(state, rng, opts);
      ++tick_cases;

      int live = 0, dead = 0;
      bool position_ok = true;
      for (const Agent& agent : state.agents) {
        if (agent.alive) {
          ++live;
          if (!state.grid.in_bounds(agent.pos) ||
              state.grid.occupant(agent.pos) != agent.id)
            position_ok = false;
        } else {
          ++dead;
          if (agent.role == Role::Civilian) conservation_bad++;
        }
      }
      int occupied = 0;
      for (int r = 0; r < state.grid.rows(); ++r)
        for (int c = 0; c < state.grid.cols(); ++c)
          if (!state.grid.empty(Cell{r, c})) ++occupied;
      if (!position_ok || occupied != live) ++occupancy_bad;
      if (live + dead != total) ++conservation_bad;

      if (state.live_count(Role::Cop) == 0 ||
          state.live_count(Role::Activist) == 0)
        break;
    }
  }

  // Suite 5: death probability is in [0, 1) and monotone in the force ratio.
  int death_cases = 0, death_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const double f_same = 0.1 + 49.9 * u01(gen);
    double r1 = 6.0 * u01(gen);
    double r2 = 6.0 * u01(gen);
    if (r1 > r2) std::swap(r1, r2);
    const double p1 =
        acsee::behavior::death_probability_from_forces(f_same, f_same * r1);
    const double p2 =
        acsee::behavior::death_probability_from_forces(f_same, f_same * r2);
    ++death_cases;
    if (!(p1 >= 0.0 && p1 < 1.0 && p2 >= 0.0 && p2 < 1.0) || p1 > p2)
      ++death_bad;
  }

  const int violations =
      emotion_bad + force_bad + occupancy_bad + conservation_bad + death_bad;
  Outcome out;
  out.pass = violations == 0 && tick_cases >= 10000;
  out.detail = "cases: emotion " + std::to_string(emotion_cases) + ", force " +
               std::to_string(force_cases) + ", occupancy " +
               std::to_string(tick_cases) + ", conservation " +
               std::to_string(tick_cases) + ", death " +
               std::to_string(death_cases) + "; violations " +
               std::to_string(violations);
  return out;
}

// ---------------------------------------------------------------------------
// C5: identical batch specification, different worker counts -> byte-identical
// bundles, within a one-minute budget.

Outcome c5() {
  Timer timer;
  const ScenarioConfig cfg = acsee::load_scenario(scenario_path("no1.json"));
  const EngineOptions opts;  // bundle-writing defaults, as the CLI uses
  const BatchResult serial =
      acsee::engine::batch_run(cfg, opts, 20, cfg.seed, 1);
  const BatchResult threaded =
      acsee::engine::batch_run(cfg, opts, 20, cfg.seed, 4);

  const std::string dir1 = make_temp_dir("c5a");
  const std::string dir2 = make_temp_dir("c5b");
  acsee::bundle::write_batch_bundle(dir1, cfg, opts, cfg.seed, serial);
  acsee::bundle::write_batch_bundle(dir2, cfg, opts, cfg.seed, threaded);

  const char* files[] = {"manifest.json", "series.csv", "runs.csv",
                         "metrics.json"};
  int identical = 0;
  for (const char* f : files) {
    const std::string a = slurp(fs::path(dir1) / f);
    const std::string b = slurp(fs::path(dir2) / f);
    if (!a.empty() && a == b) ++identical;
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);

  const double elapsed = timer.seconds();
  Outcome out;
  out.pass = identical == 4 && elapsed < 60.0;
  out.detail = std::to_string(identical) +
               "/4 bundle files byte-identical between 1 and 4 workers, " +
               num(elapsed, 3) + " s (budget 60 s)";
  return out;
}

// ---------------------------------------------------------------------------
// C6: final active ratio falls as the cop count rises, with full suppression
// at high cop counts.

Outcome c6() {
  Timer timer;
  const ScenarioConfig base = acsee::load_scenario(scenario_path("no1.json"));
  const EngineOptions opts = bulk_options();
  const std::vector<double> cop_counts = {0, 30, 40, 60, 80};
  constexpr int kRuns = 50;

  std::vector<double> means;
  std::vector<double> elim_fraction;
  for (double v : cop_counts) {
    ScenarioConfig cfg = acsee::engine::apply_sweep_param(base, "n_cops", v);
    double sum = 0.0;
    int eliminated = 0;
    for (int i = 0; i < kRuns; ++i) {
      cfg.seed = base.seed + static_cast<std::uint64_t>(i);
      const RunResult result = acsee::engine::run(cfg, opts);
      sum += result.series.active_ratio.back();
      if (result.series.live_activists.back() == 0.0) ++eliminated;
    }
    means.push_back(sum / kRuns);
    elim_fraction.push_back(static_cast<double>(eliminated) / kRuns);
  }

  bool monotone = true;
  for (std::size_t i = 1; i < means.size(); ++i)
    if (means[i] > means[i - 1] + 1e-12) monotone = false;
  const double rho = spearman(cop_counts, means);
  const double elim60 = elim_fraction[3];
  const double elim80 = elim_fraction[4];
  const double elapsed = timer.seconds();

  Outcome out;
  out.pass = monotone && rho <= -0.8 && elim60 >= 0.7 && elim80 >= 0.7 &&
             elapsed <= 600.0;
  std::ostringstream os;
  os << "mean final active ratio over 50 runs:";
  for (std::size_t i = 0; i < cop_counts.size(); ++i)
    os << " " << static_cast<int>(cop_counts[i]) << "->" << num(means[i], 4);
  os << "; rank correlation " << num(rho, 4) << " (<= -0.8)"
     << "; suppression at 60/80 cops " << num(elim60, 3) << "/"
     << num(elim80, 3) << " (>= 0.7); " << secs(elapsed) << " s (budget 600)";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// C7: widening the perception radius or raising receive strength never raises
// the mean final active ratio, and both saturate at the top of the range.

Outcome c7() {
  Timer timer;
  const ScenarioConfig base = acsee::load_scenario(scenario_path("no2.json"));
  const EngineOptions opts = bulk_options();
  constexpr int kRuns = 50;

  auto mean_final = [&](const char* name, double value) {
    const ScenarioConfig cfg =
        acsee::engine::apply_sweep_param(base, name, value);
    const BatchResult batch =
        acsee::engine::batch_run(cfg, opts, kRuns, base.seed, 1);
    return batch.mean.active_ratio.back();
  };

  const double r_pr2 = mean_final("pr", 2);
  const double r_pr6 = mean_final("pr", 6);
  const double r_pr10 = mean_final("pr", 10);
  const double r_pr12 = mean_final("pr", 12);

  const double r_a02 = mean_final("a", 0.2);
  const double r_a05 = mean_final("a", 0.5);
  const double r_a08 = mean_final("a", 0.8);
  const double r_a10 = mean_final("a", 1.0);

  const double tol = 1e-12;
  const bool pr_monotone = r_pr6 <= r_pr2 + tol && r_pr10 <= r_pr6 + tol;
  const bool pr_saturates = std::abs(r_pr12 - r_pr10) < 0.05;
  const bool a_monotone =
      r_a05 <= r_a02 + tol && r_a08 <= r_a05 + tol && r_a10 <= r_a08 + tol;
  const bool a_saturates = std::abs(r_a10 - r_a08) < 0.05;
  const double elapsed = timer.seconds();

  Outcome out;
  out.pass = pr_monotone && pr_saturates && a_monotone && a_saturates;
  std::ostringstream os;
  os << "radius 2/6/10/12 -> " << num(r_pr2, 4) << "/" << num(r_pr6, 4) << "/"
     << num(r_pr10, 4) << "/" << num(r_pr12, 4)
     << " (non-increasing, |10-12| < 0.05); receive 0.2/0.5/0.8/1.0 -> "
     << num(r_a02, 4) << "/" << num(r_a05, 4) << "/" << num(r_a08, 4) << "/"
     << num(r_a10, 4) << " (non-increasing, |1.0-0.8| < 0.05); "
     << secs(elapsed) << " s";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// C8: when cops start with the larger total deterrent force, activists
// cooperate more than cops on average (sign test across batches, p < 0.05).

Outcome c8() {
  Timer timer;
  const ScenarioConfig base = acsee::load_scenario(scenario_path("no2.json"));
  const EngineOptions opts = bulk_options();
  constexpr int kRuns = 50;

  struct BatchSpec {
    double n_cops;
    std::uint64_t base_seed;
  };
  const BatchSpec specs[] = {
      {70, 2001}, {70, 2002}, {70, 2003}, {70, 2004},
      {60, 3001}, {60, 3002}, {80, 4001}, {80, 4002},
  };

  int qualifying = 0;
  int successes = 0;
  std::ostringstream pairs;
  for (const BatchSpec& spec : specs) {
    const ScenarioConfig cfg =
        acsee::engine::apply_sweep_param(base, "n_cops", spec.n_cops);
    const double cop_force0 =
        cfg.n_cops * acsee::game::deterrent_force(cfg.emotion_cop);
    const double act_force0 =
        cfg.n_activists * acsee::game::deterrent_force(cfg.emotion_activist);
    if (!(cop_force0 > act_force0)) continue;  // outside the claim's premise
    ++qualifying;

    const BatchResult batch =
        acsee::engine::batch_run(cfg, opts, kRuns, spec.base_seed, 1);
    const double act_coop = mean_of(batch.mean.coop_ratio_activists);
    const double cop_coop = mean_of(batch.mean.coop_ratio_cops);
    if (act_coop > cop_coop) ++successes;
    pairs << " " << num(act_coop, 3) << ">" << num(cop_coop, 3);
  }

  const double p = sign_test_p(qualifying, successes);
  const double elapsed = timer.seconds();
  Outcome out;
  out.pass = qualifying >= 8 && p < 0.05;
  std::ostringstream os;
  os << successes << "/" << qualifying
     << " batches with activist cooperation above cop cooperation"
     << " (activist>cop means:" << pairs.str() << "); sign test p = "
     << num(p, 4) << " (< 0.05); " << secs(elapsed) << " s";
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// C9: freezing emotion freezes the per-role force spread at zero; live
// emotion spreads the forces within ten ticks in at least 90% of runs.

Outcome c9() {
  const ScenarioConfig base = acsee::load_scenario(scenario_path("no1.json"));

  EngineOptions frozen = bulk_options();
  frozen.emotion_enabled = false;
  frozen.keep_trace = true;

  auto role_spread = [](const acsee::TickSnapshot& snap, Role role) {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    for (const acsee::AgentSnapshot& a : snap.agents) {
      if (!a.alive || a.role != role) continue;
      if (n == 0) {
        lo = hi = a.force;
      } else {
        lo = std::min(lo, a.force);
        hi = std::max(hi, a.force);
      }
      ++n;
    }
    return n >= 2 ? hi - lo : 0.0;
  };

  int frozen_bad_ticks = 0;
  for (int i = 0; i < 10; ++i) {
    ScenarioConfig cfg = base;
    cfg.seed = base.seed + static_cast<std::uint64_t>(i);
    const RunResult result = acsee::engine::run(cfg, frozen);
    for (const acsee::TickSnapshot& snap : result.trace.ticks) {
      for (Role role : {Role::Civilian, Role::Activist, Role::Cop})
        if (role_spread(snap, role) != 0.0) ++frozen_bad_ticks;
    }
  }

  EngineOptions live = bulk_options();
  live.keep_trace = true;

  int spread_runs = 0;
  constexpr int kRuns = 50;
  for (int i = 0; i < kRuns; ++i) {
    ScenarioConfig cfg = base;
    cfg.seed = base.seed + static_cast<std::uint64_t>(i);
    cfg.max_ticks = 12;  // only the first ten ticks matter here
    const RunResult result = acsee::engine::run(cfg, live);
    bool spread_seen = false;
    for (const acsee::TickSnapshot& snap : result.trace.ticks) {
      if (snap.tick < 1 || snap.tick > 10) continue;
      bool all_positive = true;
      int roles_with_pairs = 0;
      for (Role role : {Role::Activist, Role::Cop}) {
        int live_members = 0;
        for (const acsee::AgentSnapshot& a : snap.agents)
          if (a.alive && a.role == role) ++live_members;
        if (live_members < 2) continue;
        ++roles_with_pairs;
        if (role_spread(snap, role) <= 0.0) all_positive = false;
      }
      if (roles_with_pairs > 0 && all_positive) {
        spread_seen = true;
        break;
      }
    }
    if (spread_seen) ++spread_runs;
  }

  const double fraction = static_cast<double>(spread_runs) / kRuns;
  Outcome out;
  out.pass = frozen_bad_ticks == 0 && fraction >= 0.9;
  out.detail = "frozen emotion: " + std::to_string(frozen_bad_ticks) +
               " ticks with nonzero within-role force spread over 10 runs; "
               "live emotion: spread positive by tick 10 in " +
               num(100.0 * fraction, 4) + "% of " + std::to_string(kRuns) +
               " runs (>= 90%)";
  return out;
}

// ---------------------------------------------------------------------------
// C10: trajectory-comparison metrics behave on analytic fixtures; external
// reference trajectories are unavailable, so cross-dataset comparisons are
// declared not reproducible.

Outcome c10() {
  const double pi = std::acos(-1.0);
  bool angles_ok = true;
  angles_ok &= std::abs(acsee::metrics::angular_error({1, 0}, {1, 0}) - 0.0) <=
               1e-12;
  angles_ok &=
      std::abs(acsee::metrics::angular_error({1, 0}, {1, 1}) - pi / 4) <= 1e-12;
  angles_ok &=
      std::abs(acsee::metrics::angular_error({1, 0}, {0, 1}) - pi / 2) <= 1e-12;

  // Identical path sets sit exactly at the covariance-regularization floor.
  acsee::metrics::DominantPath walk;
  walk.role = Role::Activist;
  walk.members = {0, 1, 2};
  for (int t = 0; t < 20; ++t)
    walk.points.push_back({t, 0.5 * t, 1.0 + 0.1 * t});
  const double floor_h = acsee::metrics::entropy_metric({walk}, {walk});
  const double kFloor = -10.9776334915549286;
  const bool floor_ok = std::abs(floor_h - kFloor) <= 1e-9;

  acsee::metrics::DominantPath walk2 = walk;
  walk2.members = {3, 4, 5};
  for (auto& p : walk2.points) p.x += 6.0;
  bool idm_warned = false;
  const double idm_self =
      acsee::metrics::idm({walk, walk2}, {walk, walk2}, &idm_warned);
  const bool idm_ok = idm_self == 0.0 && !idm_warned;

  // A unit isotropic Gaussian error cloud lands near the analytic entropy.
  acsee::metrics::DominantPath ref, sim;
  ref.role = sim.role = Role::Cop;
  ref.members = sim.members = {0, 1, 2};
  acsee::Rng rng(424242);
  constexpr int kSamples = 10000;
  for (int t = 0; t < kSamples; ++t) {
    const double u1 = 1.0 - rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    ref.points.push_back({t, 0.0, 0.0});
    sim.points.push_back(
        {t, r * std::cos(2.0 * pi * u2), r * std::sin(2.0 * pi * u2)});
  }
  const double gauss_h = acsee::metrics::entropy_metric({sim}, {ref});
  const double kGaussTarget = 2.83787706640934548;  // 0.5*ln((2*pi*e)^2)
  const bool gauss_ok = std::abs(gauss_h - kGaussTarget) < 0.1;

  Outcome out;
  out.pass = angles_ok && floor_ok && idm_ok && gauss_ok;
  std::ostringstream os;
  os << "angular error exact at 0/pi4/pi2: " << (angles_ok ? "yes" : "NO")
     << "; self-comparison entropy " << num(floor_h, 12) << " (floor "
     << num(kFloor, 12) << "), idm " << num(idm_self, 3)
     << "; unit-Gaussian entropy " << num(gauss_h, 5) << " vs "
     << num(kGaussTarget, 5)
     << " (tol 0.1); external reference trajectories unavailable, so "
        "dataset-comparison scores are validated on fixtures only and "
        "declared not reproducible";
  out.detail = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using CriterionFn = Outcome (*)();
  const CriterionFn criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};

  int first = 0, last = 9;
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
      return 2;
    }
    first = last = n - 1;
  }

  bool all_pass = true;
  for (int i = first; i <= last; ++i) {
    Outcome out;
    try {
      out = criteria[i]();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    std::printf("C%d %s — %s\n", i + 1, out.pass ? "PASS" : "FAIL",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
