#include "core/game.hpp"

#include <cmath>
#include <numbers>

namespace acsee::game {

double deterrent_force(double e) {
  return std::sin(std::abs(e) * std::numbers::pi / 2.0);
}

std::vector<double> force_table(const SimState& state) {
  std::vector<double> f(state.agents.size(), 0.0);
  for (const Agent& a : state.agents)
    if (a.alive && a.role != Role::Civilian)
      f[static_cast<std::size_t>(a.id)] = deterrent_force(a.emotion);
  return f;
}

Forces total_forces(const SimState& state, const std::vector<double>& force,
                    int index, double radius) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  Forces out;
  if (self.role == Role::Civilian) return out;
  const double r2 = radius * radius;
  for (const Agent& other : state.agents) {
    if (!other.alive || other.role == Role::Civilian) continue;
    if (other.id != self.id && distance2(self.pos, other.pos) > r2) continue;
    if (other.role == self.role)
      out.same += force[static_cast<std::size_t>(other.id)];
    else
      out.opposing += force[static_cast<std::size_t>(other.id)];
  }
  return out;
}

Situation classify(double f_same, double f_opposing, double eps_bal) {
  Situation s;
  s.delta_f = f_same - f_opposing;
  if (std::abs(s.delta_f) <= eps_bal)
    s.kind = SituationKind::Balanced;
  else
    s.kind = s.delta_f > 0 ? SituationKind::DeltaPositive
                           : SituationKind::DeltaNegative;
  return s;
}

namespace {

// payoffs[kind][cop strategy][activist strategy] -> {cop, activist}
constexpr double kPayoffs[3][2][2][2] = {
    // delta positive: cop side stronger
    {{{1, 4}, {2, 2}}, {{3, 3}, {4, 1}}},
    // balanced
    {{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}},
    // delta negative: activist side stronger
    {{{4, 1}, {3, 3}}, {{2, 2}, {1, 4}}},
};

}  // namespace

std::pair<double, double> payoff(SituationKind kind, Strategy cop_strategy,
                                 Strategy activist_strategy) {
  const auto& cell = kPayoffs[static_cast<std::size_t>(kind)]
                             [static_cast<std::size_t>(cop_strategy)]
                             [static_cast<std::size_t>(activist_strategy)];
  return {cell[0], cell[1]};
}

Strategy active_strategy(const StrategyChromosome& chromosome,
                         SituationKind own_kind) {
  return chromosome.at(own_kind);
}

double round_benefit(const SimState& state, int index, const Situation& own,
                     BenefitAgg agg) {
  return round_benefit_at(
      state, index, state.agents[static_cast<std::size_t>(index)].pos, own,
      agg);
}

double round_benefit_at(const SimState& state, int index, Cell pos,
                        const Situation& own, BenefitAgg agg) {
  const Agent& self = state.agents[static_cast<std::size_t>(index)];
  const bool self_is_cop = self.role == Role::Cop;
  const Role opposing_role = self_is_cop ? Role::Activist : Role::Cop;

  // Everything is scored in the perceiver's situation: the perceiver decodes
  // at its own class, the opponent at the mirrored one, and the payoff table
  // is addressed in cop orientation.
  const SituationKind own_kind = own.kind;
  const SituationKind opp_kind = negate(own_kind);
  const SituationKind cop_kind = self_is_cop ? own_kind : opp_kind;
  const Strategy own_strategy = self.chromosome.at(own_kind);

  const double r2 = state.config.pr * state.config.pr;
  double sum = 0.0;
  int n = 0;
  for (const Agent& opp : state.agents) {
    if (!opp.alive || opp.role != opposing_role) continue;
    if (distance2(pos, opp.pos) > r2) continue;
    const Strategy opp_strategy = opp.chromosome.at(opp_kind);
    const auto [cop_b, act_b] =
        self_is_cop ? payoff(cop_kind, own_strategy, opp_strategy)
                    : payoff(cop_kind, opp_strategy, own_strategy);
    sum += self_is_cop ? cop_b : act_b;
    ++n;
  }
  if (n == 0) return 0.0;
  return agg == BenefitAgg::Mean ? sum / n : sum;
}

void evolve_strategies(SimState& state, const std::vector<double>& benefit,
                       const std::vector<Situation>& situation, Rng& rng,
                       double p_mut) {
  const double r2 = state.config.pr * state.config.pr;
  const std::size_t n = state.agents.size();

  // Imitation reads the frozen chromosomes; stage the adopted bits and apply
  // them only after every agent has chosen.
  std::vector<std::pair<int, bool>> adopted(n, {-1, false});
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& self = state.agents[i];
    if (!self.alive || self.role == Role::Civilian) continue;
    int best = -1;
    double best_benefit = benefit[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Agent& other = state.agents[j];
      if (!other.alive || other.role != self.role) continue;
      if (distance2(self.pos, other.pos) > r2) continue;
      if (benefit[j] > best_benefit ||
          (best >= 0 && benefit[j] == best_benefit &&
           other.id < best)) {
        best = other.id;
        best_benefit = benefit[j];
      }
    }
    if (best >= 0) {
      const std::size_t k =
          static_cast<std::size_t>(situation[i].kind);
      adopted[i] = {1, state.agents[static_cast<std::size_t>(best)]
                           .chromosome.bits[k]};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Agent& self = state.agents[i];
    if (!self.alive || self.role == Role::Civilian) continue;
    if (adopted[i].first >= 0) {
      const std::size_t k = static_cast<std::size_t>(situation[i].kind);
      self.chromosome.bits[k] = adopted[i].second;
    }
    for (std::size_t b = 0; b < 3; ++b)
      if (rng.bernoulli(p_mut)) self.chromosome.bits[b] = !self.chromosome.bits[b];
  }
}

}  // namespace acsee::game
