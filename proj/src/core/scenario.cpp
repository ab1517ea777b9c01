#include "core/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace acsee {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}

void check_keys(const ordered_json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) parse_fail("unknown key '" + path + it.key() + "'");
  }
}

const ordered_json& get(const ordered_json& obj, const std::string& path,
                        const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail("missing key '" + path + key + "'");
  return *it;
}

const ordered_json& get_section(const ordered_json& obj,
                                const char* key) {
  const ordered_json& v = get(obj, "", key);
  if (!v.is_object())
    parse_fail("'" + std::string(key) + "' must be an object");
  return v;
}

double get_num(const ordered_json& obj, const std::string& path,
               const char* key) {
  const ordered_json& v = get(obj, path, key);
  if (!v.is_number()) parse_fail("'" + path + key + "' must be a number");
  return v.get<double>();
}

int get_int(const ordered_json& obj, const std::string& path,
            const char* key) {
  const ordered_json& v = get(obj, path, key);
  if (!v.is_number_integer())
    parse_fail("'" + path + key + "' must be an integer");
  return v.get<int>();
}

bool emotion_in_domain(double e) {
  return e >= -0.999 && e <= 0.999 && e != 0.0;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    parse_fail(std::string("invalid JSON: ") + ex.what());
  }
  if (!root.is_object()) parse_fail("scenario root must be an object");
  check_keys(root, "",
             {"counts", "grid", "emotions", "thresholds", "contagion", "run",
              "placements"});

  ScenarioConfig cfg;

  const auto& counts = get_section(root, "counts");
  check_keys(counts, "counts.", {"civilians", "activists", "cops"});
  cfg.n_civilians = get_int(counts, "counts.", "civilians");
  cfg.n_activists = get_int(counts, "counts.", "activists");
  cfg.n_cops = get_int(counts, "counts.", "cops");

  const auto& grid = get_section(root, "grid");
  check_keys(grid, "grid.", {"rows", "cols"});
  cfg.rows = get_int(grid, "grid.", "rows");
  cfg.cols = get_int(grid, "grid.", "cols");

  const auto& emotions = get_section(root, "emotions");
  check_keys(emotions, "emotions.", {"civilian", "activist", "cop"});
  cfg.emotion_civilian = get_num(emotions, "emotions.", "civilian");
  cfg.emotion_activist = get_num(emotions, "emotions.", "activist");
  cfg.emotion_cop = get_num(emotions, "emotions.", "cop");

  const auto& thresholds = get_section(root, "thresholds");
  check_keys(thresholds, "thresholds.", {"t_a2c", "t_c2a", "delta"});
  cfg.t_a2c = get_num(thresholds, "thresholds.", "t_a2c");
  cfg.t_c2a = get_num(thresholds, "thresholds.", "t_c2a");
  if (thresholds.contains("delta"))
    cfg.delta = get_num(thresholds, "thresholds.", "delta");

  const auto& contagion = get_section(root, "contagion");
  check_keys(contagion, "contagion.", {"pr", "a", "b"});
  cfg.pr = get_num(contagion, "contagion.", "pr");
  cfg.a = get_num(contagion, "contagion.", "a");
  if (contagion.contains("b")) cfg.b = get_num(contagion, "contagion.", "b");

  const auto& run = get_section(root, "run");
  check_keys(run, "run.", {"max_ticks", "seed"});
  cfg.max_ticks = get_int(run, "run.", "max_ticks");
  const auto& seed = get(run, "run.", "seed");
  if (seed.is_number_unsigned())
    cfg.seed = seed.get<std::uint64_t>();
  else if (seed.is_number_integer())
    cfg.seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
  else
    parse_fail("'run.seed' must be an integer");

  if (root.contains("placements")) {
    const auto& arr = root["placements"];
    if (!arr.is_array()) parse_fail("'placements' must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& p = arr[i];
      const std::string path = "placements[" + std::to_string(i) + "].";
      if (!p.is_object()) parse_fail("'placements' entries must be objects");
      check_keys(p, path, {"role", "row", "col", "emotion"});
      const auto& role_v = get(p, path, "role");
      if (!role_v.is_string()) parse_fail("'" + path + "role' must be a string");
      auto role = role_from_string(role_v.get<std::string>());
      if (!role)
        parse_fail("'" + path + "role' must be civilian|activist|cop");
      Placement pl;
      pl.role = *role;
      pl.row = get_int(p, path, "row");
      pl.col = get_int(p, path, "col");
      pl.emotion = get_num(p, path, "emotion");
      cfg.placements.push_back(pl);
    }
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "read error on: " + path);
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
  ordered_json root;
  root["counts"] = {{"civilians", cfg.n_civilians},
                    {"activists", cfg.n_activists},
                    {"cops", cfg.n_cops}};
  root["grid"] = {{"rows", cfg.rows}, {"cols", cfg.cols}};
  root["emotions"] = {{"civilian", cfg.emotion_civilian},
                      {"activist", cfg.emotion_activist},
                      {"cop", cfg.emotion_cop}};
  root["thresholds"] = {
      {"t_a2c", cfg.t_a2c}, {"t_c2a", cfg.t_c2a}, {"delta", cfg.delta}};
  root["contagion"] = {{"pr", cfg.pr}, {"a", cfg.a}, {"b", cfg.b}};
  root["run"] = {{"max_ticks", cfg.max_ticks}, {"seed", cfg.seed}};
  if (!cfg.placements.empty()) {
    ordered_json arr = ordered_json::array();
    for (const Placement& p : cfg.placements)
      arr.push_back({{"role", to_string(p.role)},
                     {"row", p.row},
                     {"col", p.col},
                     {"emotion", p.emotion}});
    root["placements"] = std::move(arr);
  }
  return root.dump(2);
}

void ScenarioConfig::validate() const {
  std::vector<std::string> bad;
  auto complain = [&bad](const std::string& msg) { bad.push_back(msg); };

  if (rows <= 0) complain("grid.rows must be > 0");
  if (cols <= 0) complain("grid.cols must be > 0");
  if (n_civilians < 0) complain("counts.civilians must be >= 0");
  if (n_activists < 0) complain("counts.activists must be >= 0");
  if (n_cops < 0) complain("counts.cops must be >= 0");
  if (!(t_a2c > 0)) complain("thresholds.t_a2c must be > 0");
  if (!(t_c2a < 0)) complain("thresholds.t_c2a must be < 0");
  if (!(delta > 0)) complain("thresholds.delta must be > 0");
  if (!(pr > 0)) complain("contagion.pr must be > 0");
  if (!(a >= 0 && a <= 1)) complain("contagion.a must be in [0,1]");
  if (!(b >= 0 && b <= 1)) complain("contagion.b must be in [0,1]");
  if (max_ticks <= 0) complain("run.max_ticks must be > 0");

  // Per-role start emotions only matter for agents actually spawned from
  // counts; placements carry their own emotion.
  if (n_civilians > 0 && !emotion_in_domain(emotion_civilian))
    complain("emotions.civilian must be in [-0.999,0.999] and nonzero");
  if (n_activists > 0) {
    if (!emotion_in_domain(emotion_activist))
      complain("emotions.activist must be in [-0.999,0.999] and nonzero");
    else if (emotion_activist >= 0)
      complain("emotions.activist must be < 0");
  }
  if (n_cops > 0) {
    if (!emotion_in_domain(emotion_cop))
      complain("emotions.cop must be in [-0.999,0.999] and nonzero");
    else if (emotion_cop <= 0)
      complain("emotions.cop must be > 0");
  }

  for (std::size_t i = 0; i < placements.size(); ++i) {
    const Placement& p = placements[i];
    const std::string tag = "placements[" + std::to_string(i) + "]";
    if (rows > 0 && cols > 0 &&
        (p.row < 0 || p.row >= rows || p.col < 0 || p.col >= cols))
      complain(tag + " is out of grid bounds");
    if (!emotion_in_domain(p.emotion))
      complain(tag + ".emotion must be in [-0.999,0.999] and nonzero");
    else if (p.role == Role::Activist && p.emotion >= 0)
      complain(tag + ".emotion must be < 0 for an activist");
    else if (p.role == Role::Cop && p.emotion <= 0)
      complain(tag + ".emotion must be > 0 for a cop");
    for (std::size_t j = 0; j < i; ++j)
      if (placements[j].row == p.row && placements[j].col == p.col) {
        complain(tag + " duplicates the cell of placements[" +
                 std::to_string(j) + "]");
        break;
      }
  }

  if (!bad.empty()) {
    std::string msg = "invalid scenario:";
    for (const std::string& m : bad) msg += "\n  - " + m;
    throw Error(ErrorKind::Validation, msg);
  }

  if (rows > 0 && cols > 0 &&
      total_agents() > static_cast<long long>(rows) * cols) {
    throw Error(ErrorKind::Capacity,
                "agent count " + std::to_string(total_agents()) +
                    " exceeds grid capacity " + std::to_string(rows * cols));
  }
}

SimState init_state(const ScenarioConfig& config, Rng& rng) {
  config.validate();

  SimState st;
  st.config = config;
  st.grid = Grid(config.rows, config.cols);
  st.tick = 0;
  st.agents.reserve(static_cast<std::size_t>(config.total_agents()));

  auto finish_agent = [&](Agent& a) {
    a.warn_threshold = rng.uniform(0.7, 0.9);
    a.warn_limit = static_cast<int>(rng.uniform_int(8, 20));
    for (int b = 0; b < 3; ++b) a.chromosome.bits[b] = rng.bernoulli(0.5);
    a.receive_strength = config.a;
    a.send_strength = config.b;
  };

  auto add_agent = [&](Role role, Cell pos, double emotion) {
    Agent a;
    a.id = static_cast<int>(st.agents.size());
    a.role = role;
    a.pos = pos;
    a.emotion = emotion;
    st.grid.place(a.id, pos);
    finish_agent(a);
    st.agents.push_back(a);
  };

  for (const Placement& p : config.placements)
    add_agent(p.role, Cell{p.row, p.col}, p.emotion);

  std::vector<Cell> empties;
  empties.reserve(static_cast<std::size_t>(config.rows) * config.cols);
  for (int r = 0; r < config.rows; ++r)
    for (int c = 0; c < config.cols; ++c)
      if (st.grid.empty(Cell{r, c})) empties.push_back(Cell{r, c});

  auto sample_cell = [&]() {
    const std::size_t k =
        static_cast<std::size_t>(rng.index(empties.size()));
    const Cell cell = empties[k];
    empties[k] = empties.back();
    empties.pop_back();
    return cell;
  };

  for (int i = 0; i < config.n_civilians; ++i)
    add_agent(Role::Civilian, sample_cell(), config.emotion_civilian);
  for (int i = 0; i < config.n_activists; ++i)
    add_agent(Role::Activist, sample_cell(), config.emotion_activist);
  for (int i = 0; i < config.n_cops; ++i)
    add_agent(Role::Cop, sample_cell(), config.emotion_cop);

  st.dbene.assign(st.agents.size(), 0.0);
  return st;
}

}  // namespace acsee
