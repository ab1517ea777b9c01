#pragma once

#include <utility>
#include <vector>

#include "core/rng.hpp"
#include "core/types.hpp"

namespace acsee::game {

struct Situation {
  SituationKind kind = SituationKind::Balanced;
  double delta_f = 0.0;  // raw own-side minus opposing force difference
};

struct Forces {
  double same = 0.0;      // live same-side agents within PR, self included
  double opposing = 0.0;  // live opposing agents within PR
};

// sin(|e| * pi/2): monotone in |e|, even, in [0,1) on the emotion domain.
double deterrent_force(double e);

// Per-agent deterrent forces; dead agents and civilians contribute 0.
// Civilians belong to neither side's sum.
std::vector<double> force_table(const SimState& state);

Forces total_forces(const SimState& state, const std::vector<double>& force,
                    int index, double radius);

// Sign classification of same - opposing with the balance tolerance.
Situation classify(double f_same, double f_opposing, double eps_bal);

// Payoffs for one cop-vs-activist game. `kind` must be expressed in the
// cop-minus-activist orientation (negate an activist perceiver's class
// before lookup). Returns (cop benefit, activist benefit).
std::pair<double, double> payoff(SituationKind kind, Strategy cop_strategy,
                                 Strategy activist_strategy);

Strategy active_strategy(const StrategyChromosome& chromosome,
                         SituationKind own_kind);

// The perceiver's summed (or averaged) payoff from one game against every
// live opposing agent within PR, all scored under the perceiver's situation.
// The opponent's strategy decodes at the negated class.
double round_benefit(const SimState& state, int index, const Situation& own,
                     BenefitAgg agg);

// Same, but measured as if the perceiver stood at `pos` (movement planning).
double round_benefit_at(const SimState& state, int index, Cell pos,
                        const Situation& own, BenefitAgg agg);

// Local imitate-the-best: copy the current-situation bit from the strictly
// richest live same-side neighbor within PR (ties -> lowest id), then flip
// each bit with probability p_mut. Civilians and the dead are untouched.
// `benefit` and `situation` are this tick's frozen values; updates are
// written only after all imitation reads.
void evolve_strategies(SimState& state, const std::vector<double>& benefit,
                       const std::vector<Situation>& situation, Rng& rng,
                       double p_mut);

}  // namespace acsee::game
