#pragma once

#include "core/rng.hpp"
#include "core/types.hpp"

namespace acsee::emotion {

struct EmotionDelta {
  double external = 0.0;
  double mental = 0.0;
  double total() const { return external + mental; }
};

// Emotion passed from one sender to a receiver over distance L:
// (1 - logistic(L)) * sender_emotion * A * B, computed in the
// cancellation-free form sender_emotion * A * B / (1 + exp(L)).
// Monotone decreasing in L; sign follows the sender.
double pairwise_external_delta(double sender_emotion, double distance,
                               double receive_strength, double send_strength);

// Sum of pairwise deltas from every live cop and activist (never civilians)
// within the perception radius of the agent at `index`, evaluated on the
// tick-start state.
double external_increment(const SimState& state, int index);

// Benefit-driven component. Small benefit changes jitter uniformly in
// (-0.01, 0.01); larger ones saturate. The base value is oriented for cops;
// activists get its negation (a win pushes an activist further negative).
// Civilians contribute no mental term. Throws Error(Param) if delta <= 0.
double mental_increment(Role role, double dbene, double delta, Rng& rng);

// e += total delta, clamped to [-0.999, 0.999]; an exact zero is nudged to
// sign(previous e) * 1e-6 so emotion never vanishes.
double update_emotion(double e_prev, double total_delta);

// Role after threshold check: activist calms to civilian above t_a2c,
// civilian radicalizes below t_c2a, cops never change.
Role transitioned_role(Role role, double e, double t_a2c, double t_c2a);

// Applies transitioned_role to a live agent; on a change, benefit
// accumulators reset (emotion and chromosome are kept). Returns true if the
// role changed.
bool apply_role_transition(Agent& agent, const ScenarioConfig& config);

}  // namespace acsee::emotion
