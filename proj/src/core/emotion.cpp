#include "core/emotion.hpp"

#include <cmath>

namespace acsee::emotion {

double pairwise_external_delta(double sender_emotion, double distance,
                               double receive_strength,
                               double send_strength) {
  // 1 - 1/(1+e^{-L}) == 1/(1+e^{L}); the right-hand form keeps full
  // precision when L is large and the factor is tiny.
  const double attenuation = 1.0 / (1.0 + std::exp(distance));
  return attenuation * sender_emotion * receive_strength * send_strength;
}

double external_increment(const SimState& state, int index) {
  const Agent& receiver = state.agents[static_cast<std::size_t>(index)];
  const double pr = state.config.pr;
  double sum = 0.0;
  for (const Agent& sender : state.agents) {
    if (!sender.alive || sender.id == receiver.id) continue;
    if (sender.role == Role::Civilian) continue;  // civilians never send
    const double d = distance(receiver.pos, sender.pos);
    if (d > pr) continue;
    sum += pairwise_external_delta(sender.emotion, d,
                                   receiver.receive_strength,
                                   sender.send_strength);
  }
  return sum;
}

double mental_increment(Role role, double dbene, double delta, Rng& rng) {
  if (!(delta > 0))
    throw Error(ErrorKind::Param, "delta must be > 0");
  if (role == Role::Civilian) return 0.0;

  double base;
  if (std::abs(dbene) < delta) {
    base = rng.uniform(-0.01, 0.01);
  } else if (dbene > 0) {
    base = 0.1 / (delta + std::exp(delta / dbene));
  } else {
    base = -0.1 / (delta + std::exp(dbene / delta));
  }
  return role == Role::Activist ? -base : base;
}

double update_emotion(double e_prev, double total_delta) {
  double e = e_prev + total_delta;
  if (e > 0.999) e = 0.999;
  if (e < -0.999) e = -0.999;
  if (e == 0.0) e = (e_prev >= 0.0 ? 1e-6 : -1e-6);
  return e;
}

Role transitioned_role(Role role, double e, double t_a2c, double t_c2a) {
  if (role == Role::Activist && e > t_a2c) return Role::Civilian;
  if (role == Role::Civilian && e < t_c2a) return Role::Activist;
  return role;
}

bool apply_role_transition(Agent& agent, const ScenarioConfig& config) {
  const Role next = transitioned_role(agent.role, agent.emotion,
                                      config.t_a2c, config.t_c2a);
  if (next == agent.role) return false;
  agent.role = next;
  agent.benefit_prev = 0.0;
  agent.benefit_cur = 0.0;
  return true;
}

}  // namespace acsee::emotion
