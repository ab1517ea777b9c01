#include "core/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acsee::behavior {

namespace {

// Moore-1 offsets in fixed scan order; candidate enumeration depends on it
// being stable.
constexpr int kOffsets[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                {0, 1},   {1, -1}, {1, 0},  {1, 1}};

game::Forces moore1_forces(const SimState& state,
                           const std::vector<double>& force, int index) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  game::Forces out;
  out.same = force[static_cast<std::size_t>(index)];  // self included
  for (const Agent& other : state.agents) {
    if (!other.alive || other.id == self.id) continue;
    if (other.role == Role::Civilian) continue;
    if (moore_distance(self.pos, other.pos) > 1) continue;
    if (other.role == self.role)
      out.same += force[static_cast<std::size_t>(other.id)];
    else
      out.opposing += force[static_cast<std::size_t>(other.id)];
  }
  return out;
}

bool has_live_moore1_neighbor(const SimState& state, int index) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  for (const auto& off : kOffsets) {
    const Cell c{self.pos.row + off[0], self.pos.col + off[1]};
    if (state.grid.in_bounds(c) && !state.grid.empty(c)) return true;
  }
  return false;
}

std::vector<Cell> empty_neighbors(const SimState& state, Cell pos) {
  std::vector<Cell> out;
  out.reserve(8);
  for (const auto& off : kOffsets) {
    const Cell c{pos.row + off[0], pos.col + off[1]};
    if (state.grid.in_bounds(c) && state.grid.empty(c)) out.push_back(c);
  }
  return out;
}

// Argmax over candidates with uniform tie-breaking; the RNG is consulted
// only when there is an actual tie.
template <typename Score>
Cell pick_best(const std::vector<Cell>& candidates, Score&& score, Rng& rng,
               double* best_score_out = nullptr) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Cell> winners;
  for (const Cell& c : candidates) {
    const double s = score(c);
    if (s > best) {
      best = s;
      winners.assign(1, c);
    } else if (s == best) {
      winners.push_back(c);
    }
  }
  if (best_score_out) *best_score_out = best;
  if (winners.size() == 1) return winners.front();
  return winners[static_cast<std::size_t>(rng.index(winners.size()))];
}

// Distance from `from` to the nearest live agent satisfying `wanted`;
// +inf when none exists.
template <typename Pred>
double nearest_distance(const SimState& state, Cell from, Pred&& wanted) {
  double best2 = std::numeric_limits<double>::infinity();
  for (const Agent& a : state.agents) {
    if (!a.alive || !wanted(a)) continue;
    best2 = std::min(best2, distance2(from, a.pos));
  }
  return std::sqrt(best2);
}

double cop_presence(const SimState& state, const std::vector<double>& force,
                    Cell cell) {
  const double r2 = state.config.pr * state.config.pr;
  double sum = 0.0;
  for (const Agent& a : state.agents) {
    if (!a.alive || a.role != Role::Cop) continue;
    if (distance2(cell, a.pos) > r2) continue;
    sum += force[static_cast<std::size_t>(a.id)];
  }
  return sum;
}

}  // namespace

bool must_move(const SimState& state, const std::vector<double>& force,
               int index) {
  const game::Forces f = moore1_forces(state, force, index);
  return f.opposing > f.same;
}

double expected_cell_benefit(const SimState& state,
                             const std::vector<double>& force, int index,
                             Cell cell, const EngineOptions& opts) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  const double r2 = state.config.pr * state.config.pr;

  // Forces as seen from the candidate cell; everyone else stays put and the
  // agent's own force always counts toward its side.
  double same = force[static_cast<std::size_t>(index)];
  double opposing = 0.0;
  for (const Agent& other : state.agents) {
    if (!other.alive || other.id == self.id) continue;
    if (other.role == Role::Civilian) continue;
    if (distance2(cell, other.pos) > r2) continue;
    if (other.role == self.role)
      same += force[static_cast<std::size_t>(other.id)];
    else
      opposing += force[static_cast<std::size_t>(other.id)];
  }
  const game::Situation s = game::classify(same, opposing, opts.eps_bal);
  return game::round_benefit_at(state, index, cell, s, opts.benefit_agg);
}

MoveDecision choose_move(const SimState& state,
                         const std::vector<double>& force,
                         const std::vector<game::Situation>& situation,
                         int index, const EngineOptions& opts, Rng& rng) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  MoveDecision d;
  d.agent_id = self.id;
  d.target = self.pos;

  if (self.role == Role::Civilian) {
    // Move toward cop cover, but only if some neighbor is strictly safer.
    d.rationale = Rationale::SeekSafety;
    const std::vector<Cell> candidates = empty_neighbors(state, self.pos);
    if (candidates.empty()) return d;
    const double here = cop_presence(state, force, self.pos);
    double best = 0.0;
    const Cell pick = pick_best(
        candidates,
        [&](Cell c) { return cop_presence(state, force, c); }, rng, &best);
    if (best > here) d.target = pick;
    return d;
  }

  if (must_move(state, force, index)) {
    d.rationale = Rationale::Forced;
    const std::vector<Cell> candidates = empty_neighbors(state, self.pos);
    if (candidates.empty()) return d;  // boxed in: stand and take it
    d.target = pick_best(
        candidates,
        [&](Cell c) { return expected_cell_benefit(state, force, index, c, opts); },
        rng);
    return d;
  }

  const bool engaged = has_live_moore1_neighbor(state, index);
  const Strategy strat =
      self.chromosome.at(situation[static_cast<std::size_t>(index)].kind);

  if (strat == Strategy::Defection) {
    d.rationale = engaged ? Rationale::Attack : Rationale::Drift;
  } else if (self.role == Role::Cop) {
    d.rationale = engaged ? Rationale::Protect : Rationale::Drift;
  } else {
    d.rationale = engaged ? Rationale::Harass : Rationale::Drift;
  }

  // Defectors close on the nearest opponent; cooperators head for the
  // nearest civilian. Same objective whether engaged or drifting.
  auto wanted = [&](const Agent& a) {
    if (strat == Strategy::Defection)
      return a.role != Role::Civilian && a.role != self.role;
    return a.role == Role::Civilian;
  };
  const double here = nearest_distance(state, self.pos, wanted);
  if (!std::isfinite(here)) return d;  // no target anywhere: stay

  const std::vector<Cell> candidates = empty_neighbors(state, self.pos);
  if (candidates.empty()) return d;
  double best = 0.0;
  const Cell pick = pick_best(
      candidates,
      [&](Cell c) { return -nearest_distance(state, c, wanted); }, rng,
      &best);
  if (-best < here) d.target = pick;
  return d;
}

void commit_moves(SimState& state, const std::vector<MoveDecision>& decisions,
                  Rng& rng) {
  std::vector<std::size_t> order(decisions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.index(i))]);

  for (const std::size_t k : order) {
    const MoveDecision& d = decisions[k];
    Agent& agent = state.agents[static_cast<std::size_t>(d.agent_id)];
    if (!agent.alive || d.target == agent.pos) continue;
    if (!state.grid.empty(d.target)) continue;  // lost the race: stay
    state.grid.move(agent.pos, d.target);
    agent.pos = d.target;
  }
}

double death_probability_from_forces(double f_same, double f_opposing) {
  if (f_opposing <= 0.0) return 0.0;
  if (f_same <= 0.0) return std::nextafter(1.0, 0.0);
  static const double kLn01 = std::log(0.1);
  const double p = -std::expm1(kLn01 * (f_opposing / f_same));
  return p >= 1.0 ? std::nextafter(1.0, 0.0) : p;
}

double death_probability(const SimState& state,
                         const std::vector<double>& force, int index,
                         const EngineOptions& opts) {
  game::Forces f;
  if (opts.death_radius == DeathRadius::Moore1)
    f = moore1_forces(state, force, index);
  else
    f = game::total_forces(state, force, index, state.config.pr);
  return death_probability_from_forces(f.same, f.opposing);
}

bool update_warning(Agent& agent, double p_die) {
  if (p_die > agent.warn_threshold) ++agent.warn_count;
  if (agent.warn_count > agent.warn_limit) {
    agent.alive = false;
    return true;
  }
  return false;
}

}  // namespace acsee::behavior
