#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acsee {

enum class Role : std::uint8_t { Civilian = 0, Activist = 1, Cop = 2 };

// Strategy bit convention everywhere: 0 = Cooperation, 1 = Defection.
enum class Strategy : std::uint8_t { Cooperation = 0, Defection = 1 };

// Sign class of a perceiver's force difference dF = F_own_side - F_opposing,
// after the balance tolerance has been applied. The class is always relative
// to the perceiver's own side; negate() flips it to the opponent's view.
// In cop-vs-activist (payoff table) orientation, DeltaPositive means the cop
// side is stronger.
enum class SituationKind : std::uint8_t {
  DeltaPositive = 0,
  Balanced = 1,
  DeltaNegative = 2,
};

SituationKind negate(SituationKind k);

const char* to_string(Role r);
const char* to_string(Strategy s);
const char* to_string(SituationKind k);
std::optional<Role> role_from_string(const std::string& s);

enum class ErrorKind : std::uint8_t {
  Io = 0,
  Parse,
  Validation,
  Capacity,
  Param,
  Runtime,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Euclidean distance between cell centers (and its square, for radius
// tests without the sqrt).
double distance(Cell a, Cell b);
inline double distance2(Cell a, Cell b) {
  const double dr = static_cast<double>(a.row) - b.row;
  const double dc = static_cast<double>(a.col) - b.col;
  return dr * dr + dc * dc;
}
int moore_distance(Cell a, Cell b);

// One strategy bit per situation class, indexed by SituationKind:
// [0] dF > 0, [1] dF = 0, [2] dF < 0. Bit set means Defection.
struct StrategyChromosome {
  std::array<bool, 3> bits{};

  Strategy at(SituationKind k) const {
    return bits[static_cast<std::size_t>(k)] ? Strategy::Defection
                                             : Strategy::Cooperation;
  }
  void set(SituationKind k, Strategy s) {
    bits[static_cast<std::size_t>(k)] = (s == Strategy::Defection);
  }
  friend bool operator==(const StrategyChromosome&,
                         const StrategyChromosome&) = default;
};

struct Agent {
  int id = 0;
  Role role = Role::Civilian;
  Cell pos{};
  bool alive = true;

  // Emotion stays in [-0.999, 0.999] and is never exactly zero.
  double emotion = 0.0;

  StrategyChromosome chromosome{};

  // Round benefits from the two most recent game phases; their difference
  // drives the benefit-coupled emotion component.
  double benefit_prev = 0.0;
  double benefit_cur = 0.0;

  // Contagion susceptibility (receive) and expressiveness (send).
  double receive_strength = 1.0;
  double send_strength = 1.0;

  // Sustained-danger bookkeeping: warn_count increments on ticks where the
  // death probability exceeds warn_threshold; crossing warn_limit kills.
  int warn_count = 0;
  double warn_threshold = 0.8;
  int warn_limit = 12;
};

// Occupancy index over the grid. Tracks live agents only; exactly one live
// agent per occupied cell.
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
  }
  // Agent id at cell, or -1.
  int occupant(Cell c) const { return cells_[index(c)]; }
  bool empty(Cell c) const { return occupant(c) < 0; }
  void place(int agent_id, Cell c);
  void remove(Cell c);
  void move(Cell from, Cell to);

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
};

struct Placement {
  Role role = Role::Civilian;
  int row = 0;
  int col = 0;
  double emotion = 0.0;
};

struct ScenarioConfig {
  int n_civilians = 0;
  int n_activists = 0;
  int n_cops = 0;

  int rows = 0;
  int cols = 0;

  double emotion_civilian = 0.0;
  double emotion_activist = 0.0;
  double emotion_cop = 0.0;

  // Role transition thresholds: activist calms above t_a2c, civilian
  // radicalizes below t_c2a.
  double t_a2c = 0.1;
  double t_c2a = -0.5;
  // Dead zone for the benefit-difference branch of the emotion update.
  double delta = 0.1;

  double pr = 10.0;  // perception radius (cell-center Euclidean)
  double a = 0.8;    // receive strength applied to every agent
  double b = 1.0;    // send strength applied to every agent

  int max_ticks = 500;
  std::uint64_t seed = 0;

  // Pinned agents, created before the sampled counts and in addition to them.
  std::vector<Placement> placements;

  int total_agents() const {
    return n_civilians + n_activists + n_cops +
           static_cast<int>(placements.size());
  }

  // Throws Error(Validation) listing every violation, or Error(Capacity)
  // when agents outnumber cells.
  void validate() const;
};

enum class BenefitAgg : std::uint8_t { Sum = 0, Mean = 1 };
enum class DeathRadius : std::uint8_t { Pr = 0, Moore1 = 1 };

// Engine knobs that are not part of a scenario file.
struct EngineOptions {
  double eps_bal = 0.05;    // |dF| at or below this counts as balanced
  double p_mut = 0.05;      // per-bit strategy mutation probability
  BenefitAgg benefit_agg = BenefitAgg::Sum;
  DeathRadius death_radius = DeathRadius::Pr;
  bool emotion_enabled = true;  // ablation switch: freeze all emotions
  double heat_sigma = 1.5;
  int heat_every = 5;       // heatmap cadence in ticks (0 disables)
  double link_radius = 2.0;  // single-linkage distance for path clustering
  int min_group = 3;         // minimum cluster size to count as a path
  bool keep_trace = true;    // retain per-tick snapshots in the result
};

struct AgentSnapshot {
  int id = 0;
  Role role = Role::Civilian;
  Cell pos{};
  bool alive = true;
  double emotion = 0.0;
  double force = 0.0;
  // Strategy decoded at the agent's situation when the snapshot was taken;
  // absent for civilians and the dead.
  std::optional<Strategy> strategy;
};

struct TickSnapshot {
  int tick = 0;
  std::vector<AgentSnapshot> agents;
};

struct SimulationTrace {
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 0;
  std::vector<TickSnapshot> ticks;
};

// Column-oriented per-tick series; one entry per recorded tick including the
// initial state at tick 0.
struct Series {
  std::vector<int> tick;
  std::vector<double> live_civilians;
  std::vector<double> live_activists;
  std::vector<double> live_cops;
  std::vector<double> dead_total;
  std::vector<double> active_ratio;
  std::vector<double> coop_ratio_cops;
  std::vector<double> coop_ratio_activists;
  std::vector<double> mean_e_civ;
  std::vector<double> mean_e_act;
  std::vector<double> mean_e_cop;

  std::size_t size() const { return tick.size(); }
};

enum class Termination : std::uint8_t { SideEliminated = 0, MaxTicks = 1 };

const char* to_string(Termination t);

struct HeatField {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major

  double at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * cols + c];
  }
};

struct RunResult {
  Series series;
  SimulationTrace trace;  // empty when traces are not retained
  std::vector<std::pair<int, HeatField>> heatmaps;  // (tick, field)
  int termination_tick = 0;
  Termination reason = Termination::MaxTicks;
};

struct BatchResult {
  int n_runs = 0;
  std::vector<std::uint64_t> seeds;
  // Mean and sample standard deviation across runs, index-aligned by tick.
  // Shorter runs hold their terminal row for subsequent ticks so every run
  // contributes to every row.
  Series mean;
  Series stddev;
  std::vector<int> termination_ticks;
  std::vector<Termination> reasons;
};

struct SimState {
  ScenarioConfig config;
  Grid grid;
  std::vector<Agent> agents;
  int tick = 0;

  // Benefit differences recorded by the most recent game phase, consumed by
  // the next tick's emotion phase. Zero before the first game phase.
  std::vector<double> dbene;

  int live_count(Role r) const;
  const Agent* agent_at(Cell c) const;
};

}  // namespace acsee
