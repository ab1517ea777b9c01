#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

namespace acsee::metrics {

double active_ratio(const SimState& state) {
  const int act = state.live_count(Role::Activist);
  const int civ = state.live_count(Role::Civilian);
  if (act + civ == 0) return 0.0;
  return static_cast<double>(act) / (act + civ);
}

double cooperation_ratio(const SimState& state,
                         const std::vector<game::Situation>& situation,
                         Role side) {
  int total = 0;
  int coop = 0;
  for (const Agent& a : state.agents) {
    if (!a.alive || a.role != side) continue;
    ++total;
    const SituationKind k = situation[static_cast<std::size_t>(a.id)].kind;
    if (a.chromosome.at(k) == Strategy::Cooperation) ++coop;
  }
  return total == 0 ? 0.0 : static_cast<double>(coop) / total;
}

HeatField emotion_heatmap(const SimState& state, double sigma) {
  if (!(sigma > 0)) throw Error(ErrorKind::Param, "sigma must be > 0");
  HeatField field;
  field.rows = state.grid.rows();
  field.cols = state.grid.cols();
  field.values.assign(
      static_cast<std::size_t>(field.rows) * field.cols, 0.0);

  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  for (const Agent& a : state.agents) {
    if (!a.alive || a.role == Role::Civilian) continue;
    const double deposit =
        (a.role == Role::Cop ? 1.0 : -1.0) * std::abs(a.emotion);
    std::size_t k = 0;
    for (int r = 0; r < field.rows; ++r)
      for (int c = 0; c < field.cols; ++c, ++k)
        field.values[k] +=
            deposit * std::exp(-distance2(Cell{r, c}, a.pos) * inv2s2);
  }
  return field;
}

namespace {

struct Cluster {
  Role role = Role::Civilian;
  std::vector<int> members;  // sorted agent ids
  double cx = 0.0;
  double cy = 0.0;
};

int uf_find(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

// Single-linkage components of one tick's live agents, per role, kept only
// at or above min_group. Canonically ordered by center so the result does
// not depend on agent ordering.
std::vector<Cluster> clusters_at(const TickSnapshot& snap, double link_radius,
                                 int min_group) {
  std::vector<Cluster> out;
  const double link2 = link_radius * link_radius;

  for (const Role role : {Role::Civilian, Role::Activist, Role::Cop}) {
    std::vector<const AgentSnapshot*> members;
    for (const AgentSnapshot& a : snap.agents)
      if (a.alive && a.role == role) members.push_back(&a);
    const int n = static_cast<int>(members.size());
    if (n < min_group) continue;

    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[i] = i;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (distance2(members[i]->pos, members[j]->pos) <= link2) {
          const int a = uf_find(parent, i);
          const int b = uf_find(parent, j);
          if (a != b) parent[b] = a;
        }

    std::map<int, Cluster> comps;
    for (int i = 0; i < n; ++i) {
      Cluster& c = comps[uf_find(parent, i)];
      c.role = role;
      c.members.push_back(members[i]->id);
      c.cx += members[i]->pos.col;
      c.cy += members[i]->pos.row;
    }
    for (auto& [root, c] : comps) {
      if (static_cast<int>(c.members.size()) < min_group) continue;
      c.cx /= static_cast<double>(c.members.size());
      c.cy /= static_cast<double>(c.members.size());
      std::sort(c.members.begin(), c.members.end());
      out.push_back(std::move(c));
    }
  }

  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (a.cy != b.cy) return a.cy < b.cy;
    if (a.cx != b.cx) return a.cx < b.cx;
    return a.members < b.members;
  });
  return out;
}

int overlap_count(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto it = a.begin();
  for (const int id : b) {
    it = std::lower_bound(it, a.end(), id);
    if (it == a.end()) break;
    if (*it == id) ++count;
  }
  return count;
}

}  // namespace

std::vector<DominantPath> extract_dominant_paths(const SimulationTrace& trace,
                                                 double link_radius,
                                                 int min_group) {
  struct Track {
    std::size_t path = 0;
    std::vector<int> last_members;
    Role role = Role::Civilian;
  };

  std::vector<DominantPath> paths;
  std::vector<std::set<int>> unions;
  std::vector<Track> active;

  for (const TickSnapshot& snap : trace.ticks) {
    const std::vector<Cluster> clusters =
        clusters_at(snap, link_radius, min_group);

    // Pair previous-tick tracks with this tick's clusters, largest member
    // overlap first; ties resolve by track age then cluster order.
    struct Candidate {
      int overlap;
      std::size_t track;
      std::size_t cluster;
    };
    std::vector<Candidate> cands;
    for (std::size_t t = 0; t < active.size(); ++t)
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (active[t].role != clusters[c].role) continue;
        const int ov =
            overlap_count(active[t].last_members, clusters[c].members);
        if (ov > 0) cands.push_back({ov, t, c});
      }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.overlap != b.overlap) return a.overlap > b.overlap;
                if (a.track != b.track) return a.track < b.track;
                return a.cluster < b.cluster;
              });

    std::vector<bool> track_used(active.size(), false);
    std::vector<bool> cluster_used(clusters.size(), false);
    std::vector<Track> next_active;
    for (const Candidate& cand : cands) {
      if (track_used[cand.track] || cluster_used[cand.cluster]) continue;
      track_used[cand.track] = true;
      cluster_used[cand.cluster] = true;
      const Cluster& c = clusters[cand.cluster];
      const std::size_t p = active[cand.track].path;
      paths[p].points.push_back({snap.tick, c.cx, c.cy});
      unions[p].insert(c.members.begin(), c.members.end());
      next_active.push_back({p, c.members, c.role});
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (cluster_used[c]) continue;
      DominantPath path;
      path.role = clusters[c].role;
      path.points.push_back({snap.tick, clusters[c].cx, clusters[c].cy});
      paths.push_back(std::move(path));
      unions.emplace_back(clusters[c].members.begin(),
                          clusters[c].members.end());
      next_active.push_back(
          {paths.size() - 1, clusters[c].members, clusters[c].role});
    }
    active = std::move(next_active);
  }

  for (std::size_t p = 0; p < paths.size(); ++p)
    paths[p].members.assign(unions[p].begin(), unions[p].end());
  return paths;
}

double angular_error(std::pair<double, double> v_sim,
                     std::pair<double, double> v_ref) {
  const double na = std::hypot(v_sim.first, v_sim.second);
  const double nb = std::hypot(v_ref.first, v_ref.second);
  if (na == 0.0 || nb == 0.0)
    throw Error(ErrorKind::Param, "direction vector is zero");
  double c = (v_sim.first * v_ref.first + v_sim.second * v_ref.second) /
             (na * nb);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

namespace {

constexpr double kCovarianceFloor = 1e-6;

// Index-aligned mean center distance over the common prefix.
double mean_path_distance(const DominantPath& a, const DominantPath& b) {
  const std::size_t n = std::min(a.points.size(), b.points.size());
  if (n == 0) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    sum += std::hypot(a.points[k].x - b.points[k].x,
                      a.points[k].y - b.points[k].y);
  return sum / static_cast<double>(n);
}

std::vector<std::pair<std::size_t, std::size_t>> greedy_match(
    const std::vector<DominantPath>& sim,
    const std::vector<DominantPath>& ref) {
  struct Edge {
    double d;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sim.size(); ++i)
    for (std::size_t j = 0; j < ref.size(); ++j) {
      const double d = mean_path_distance(sim[i], ref[j]);
      if (std::isfinite(d)) edges.push_back({d, i, j});
    }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<bool> si(sim.size(), false), rj(ref.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : edges) {
    if (si[e.i] || rj[e.j]) continue;
    si[e.i] = true;
    rj[e.j] = true;
    out.emplace_back(e.i, e.j);
  }
  return out;
}

}  // namespace

double entropy_metric(const std::vector<DominantPath>& sim_paths,
                      const std::vector<DominantPath>& ref_paths) {
  if (sim_paths.empty() || ref_paths.empty())
    throw Error(ErrorKind::Param, "entropy metric needs paths on both sides");
  const auto matches = greedy_match(sim_paths, ref_paths);
  if (matches.empty())
    throw Error(ErrorKind::Param, "no matchable path pairs");

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (const auto& [i, j] : matches) {
    const DominantPath& a = sim_paths[i];
    const DominantPath& b = ref_paths[j];
    const std::size_t len = std::min(a.points.size(), b.points.size());
    for (std::size_t k = 0; k < len; ++k) {
      const double ex = a.points[k].x - b.points[k].x;
      const double ey = a.points[k].y - b.points[k].y;
      sxx += ex * ex;
      syy += ey * ey;
      sxy += ex * ey;
      ++n;
    }
  }
  // Zero-mean Gaussian fit with a ridge on the diagonal.
  const double den = static_cast<double>(n);
  const double cxx = sxx / den + kCovarianceFloor;
  const double cyy = syy / den + kCovarianceFloor;
  const double cxy = sxy / den;
  const double det = cxx * cyy - cxy * cxy;
  const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
  return 0.5 * std::log(two_pi_e * two_pi_e * det);
}

namespace {

// Per-tick mean center distance over all unordered path pairs of one side.
std::map<int, double> pairwise_distance_by_tick(
    const std::vector<DominantPath>& paths) {
  std::map<int, std::pair<double, int>> acc;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      auto ia = paths[i].points.begin();
      auto ib = paths[j].points.begin();
      while (ia != paths[i].points.end() && ib != paths[j].points.end()) {
        if (ia->tick < ib->tick) {
          ++ia;
        } else if (ib->tick < ia->tick) {
          ++ib;
        } else {
          auto& [sum, count] = acc[ia->tick];
          sum += std::hypot(ia->x - ib->x, ia->y - ib->y);
          ++count;
          ++ia;
          ++ib;
        }
      }
    }
  std::map<int, double> out;
  for (const auto& [tick, sc] : acc) out[tick] = sc.first / sc.second;
  return out;
}

}  // namespace

double idm(const std::vector<DominantPath>& sim_paths,
           const std::vector<DominantPath>& ref_paths, bool* warned) {
  if (warned) *warned = false;
  if (sim_paths.size() < 2 || ref_paths.size() < 2) {
    if (warned) *warned = true;
    return 0.0;
  }
  const auto sim_d = pairwise_distance_by_tick(sim_paths);
  const auto ref_d = pairwise_distance_by_tick(ref_paths);
  double sum = 0.0;
  int count = 0;
  for (const auto& [tick, d] : sim_d) {
    const auto it = ref_d.find(tick);
    if (it == ref_d.end()) continue;
    sum += std::abs(d - it->second);
    ++count;
  }
  if (count == 0) {
    if (warned) *warned = true;
    return 0.0;
  }
  return sum / count;
}

CompareReport compare_traces(const SimulationTrace& a,
                             const SimulationTrace& b, double link_radius,
                             int min_group) {
  CompareReport report;
  const auto pa = extract_dominant_paths(a, link_radius, min_group);
  const auto pb = extract_dominant_paths(b, link_radius, min_group);
  report.paths_a = static_cast<int>(pa.size());
  report.paths_b = static_cast<int>(pb.size());

  if (pa.empty() || pb.empty()) {
    report.warnings.push_back(
        "no dominant paths on one or both sides; metrics unavailable");
    return report;
  }

  try {
    report.entropy = entropy_metric(pa, pb);
  } catch (const Error& e) {
    report.warnings.push_back(std::string("entropy: ") + e.what());
  }

  const auto matches = greedy_match(pa, pb);
  double ae_sum = 0.0;
  int ae_count = 0;
  int ae_skipped = 0;
  for (const auto& [i, j] : matches) {
    auto displacement = [](const DominantPath& p) {
      return std::make_pair(p.points.back().x - p.points.front().x,
                            p.points.back().y - p.points.front().y);
    };
    const auto va = displacement(pa[i]);
    const auto vb = displacement(pb[j]);
    if ((va.first == 0 && va.second == 0) ||
        (vb.first == 0 && vb.second == 0)) {
      ++ae_skipped;
      continue;
    }
    ae_sum += angular_error(va, vb);
    ++ae_count;
  }
  if (ae_count > 0)
    report.mean_ae = ae_sum / ae_count;
  else
    report.warnings.push_back("angular error: no pair with nonzero motion");
  if (ae_skipped > 0)
    report.warnings.push_back(std::to_string(ae_skipped) +
                              " stationary pair(s) skipped in angular error");

  bool idm_warned = false;
  report.idm = idm(pa, pb, &idm_warned);
  if (idm_warned)
    report.warnings.push_back(
        "idm: fewer than two paths per side or no shared ticks; 0 by "
        "convention");
  return report;
}

}  // namespace acsee::metrics
