#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/game.hpp"
#include "core/types.hpp"

namespace acsee::metrics {

// live activists / (live activists + live civilians); 0 when nobody of
// either role is alive.
double active_ratio(const SimState& state);

// Fraction of the side's live agents whose chromosome decodes to
// Cooperation at their current situation; 0 when the side is extinct.
double cooperation_ratio(const SimState& state,
                         const std::vector<game::Situation>& situation,
                         Role side);

// Signed emotion field: every live cop adds +|e|, every live activist -|e|,
// spread over the whole grid as an unnormalized Gaussian of width sigma.
HeatField emotion_heatmap(const SimState& state, double sigma);

struct PathPoint {
  int tick = 0;
  double x = 0.0;  // column coordinate of the group center
  double y = 0.0;  // row coordinate
};

struct DominantPath {
  Role role = Role::Civilian;
  std::vector<PathPoint> points;
  std::vector<int> members;  // every agent id that ever belonged, sorted
};

// Per tick, groups same-role live agents into single-linkage clusters
// (link distance <= link_radius), keeps clusters of at least min_group
// members, and threads them through time by maximal member overlap. Each
// thread's center trajectory is one path. Output is canonically ordered
// (birth tick, then center), independent of agent ordering.
std::vector<DominantPath> extract_dominant_paths(const SimulationTrace& trace,
                                                 double link_radius,
                                                 int min_group);

// Angle in radians between two direction vectors. Throws Error(Param) on a
// zero vector.
double angular_error(std::pair<double, double> v_sim,
                     std::pair<double, double> v_ref);

// Differential entropy of a zero-mean Gaussian fitted to the per-point 2D
// errors between greedily matched paths (covariance regularized by 1e-6*I).
// Identical path sets sit at the regularization floor. Throws Error(Param)
// when either list is empty or nothing matches.
double entropy_metric(const std::vector<DominantPath>& sim_paths,
                      const std::vector<DominantPath>& ref_paths);

// Difference in mean pairwise path-center distance between the two sides,
// averaged over ticks where both sides have at least one pair. Degenerate
// inputs (fewer than two paths on a side, or no shared ticks) return 0 and
// set *warned.
double idm(const std::vector<DominantPath>& sim_paths,
           const std::vector<DominantPath>& ref_paths,
           bool* warned = nullptr);

struct CompareReport {
  std::optional<double> entropy;
  std::optional<double> mean_ae;  // mean angular error of matched pairs
  double idm = 0.0;
  int paths_a = 0;
  int paths_b = 0;
  std::vector<std::string> warnings;
};

// Full trace-vs-trace comparison; paths are matched within each role.
// Degenerate cases produce nulls and warnings, never errors.
CompareReport compare_traces(const SimulationTrace& a,
                             const SimulationTrace& b, double link_radius,
                             int min_group);

}  // namespace acsee::metrics
