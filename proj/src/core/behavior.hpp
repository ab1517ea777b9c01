#pragma once

#include <vector>

#include "core/game.hpp"
#include "core/rng.hpp"
#include "core/types.hpp"

namespace acsee::behavior {

enum class Rationale : std::uint8_t {
  Stay = 0,
  Forced,
  Attack,
  Protect,
  Harass,
  Drift,
  SeekSafety,
};

struct MoveDecision {
  int agent_id = -1;
  Cell target{};
  Rationale rationale = Rationale::Stay;
};

// True when the opposing deterrent force in the Moore-1 neighborhood
// strictly exceeds the same-side force there (self included).
bool must_move(const SimState& state, const std::vector<double>& force,
               int index);

// Round benefit the agent would earn standing at `cell`: forces and
// situation recomputed from that position, strategies decoded accordingly.
double expected_cell_benefit(const SimState& state,
                             const std::vector<double>& force, int index,
                             Cell cell, const EngineOptions& opts);

// Movement decision for one live agent, first matching case wins:
//   1. overpowered locally -> empty neighbor with max expected benefit
//   2. holding ground, Defection -> close on the nearest opponent
//   3. holding ground, Cooperation -> head for the nearest civilian
//      (cops protect, activists harass)
//   4. nobody adjacent -> same chase rules over the whole grid
//   5. civilians -> neighbor cell with the strongest cop presence in PR
// Moves happen only on strict improvement of the case's objective; all
// scoring ties break uniformly at random.
MoveDecision choose_move(const SimState& state,
                         const std::vector<double>& force,
                         const std::vector<game::Situation>& situation,
                         int index, const EngineOptions& opts, Rng& rng);

// Applies decisions in a uniformly shuffled order; a target taken by an
// earlier mover degrades to Stay.
void commit_moves(SimState& state, const std::vector<MoveDecision>& decisions,
                  Rng& rng);

// 1 - 0.1^(opposing/same); zero when unopposed, capped just below 1.
double death_probability_from_forces(double f_same, double f_opposing);

// Death probability for a live cop or activist from the forces within the
// configured radius around its current cell.
double death_probability(const SimState& state,
                         const std::vector<double>& force, int index,
                         const EngineOptions& opts);

// Bumps the warning counter when p_die exceeds the agent's threshold; the
// counter never decays. Crossing the limit kills. Returns true if the agent
// died this call.
bool update_warning(Agent& agent, double p_die);

}  // namespace acsee::behavior
