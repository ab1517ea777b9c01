#include "core/trace_io.hpp"

#include <fstream>

#include "json.hpp"

namespace acsee {

namespace {

constexpr const char* kTraceSchema = "acsee.trace.v1";

using nlohmann::ordered_json;

}  // namespace

void write_trace_jsonl(const SimulationTrace& trace,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write trace file: " + path);

  ordered_json header;
  header["schema"] = kTraceSchema;
  header["rows"] = trace.rows;
  header["cols"] = trace.cols;
  header["seed"] = trace.seed;
  out << header.dump() << '\n';

  for (const TickSnapshot& snap : trace.ticks) {
    ordered_json line;
    line["tick"] = snap.tick;
    ordered_json agents = ordered_json::array();
    for (const AgentSnapshot& a : snap.agents) {
      ordered_json obj;
      obj["id"] = a.id;
      obj["role"] = to_string(a.role);
      obj["row"] = a.pos.row;
      obj["col"] = a.pos.col;
      obj["alive"] = a.alive;
      obj["e"] = a.emotion;
      obj["f"] = a.force;
      if (a.strategy) obj["strategy"] = to_string(*a.strategy);
      agents.push_back(std::move(obj));
    }
    line["agents"] = std::move(agents);
    out << line.dump() << '\n';
  }
  if (!out) throw Error(ErrorKind::Io, "write error on: " + path);
}

SimulationTrace read_trace_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read trace file: " + path);

  auto parse_line = [&path](const std::string& text, std::size_t lineno) {
    try {
      return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) +
                                        ": invalid JSON: " + ex.what());
    }
  };

  std::string line;
  std::size_t lineno = 0;

  // Header.
  if (!std::getline(in, line))
    throw Error(ErrorKind::Parse, path + ": empty trace file");
  ++lineno;
  const ordered_json header = parse_line(line, lineno);
  if (!header.is_object() || header.value("schema", "") != kTraceSchema)
    throw Error(ErrorKind::Parse,
                path + ": not a " + std::string(kTraceSchema) + " trace");

  SimulationTrace trace;
  trace.rows = header.value("rows", 0);
  trace.cols = header.value("cols", 0);
  trace.seed = header.value("seed", std::uint64_t{0});

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const ordered_json obj = parse_line(line, lineno);
    const std::string where = path + ":" + std::to_string(lineno);
    if (!obj.contains("tick") || !obj.contains("agents"))
      throw Error(ErrorKind::Parse, where + ": snapshot needs tick and agents");

    TickSnapshot snap;
    try {
      snap.tick = obj["tick"].get<int>();
      for (const auto& a : obj["agents"]) {
        AgentSnapshot s;
        s.id = a.at("id").get<int>();
        const auto role = role_from_string(a.at("role").get<std::string>());
        if (!role) throw Error(ErrorKind::Parse, where + ": unknown role");
        s.role = *role;
        s.pos.row = a.at("row").get<int>();
        s.pos.col = a.at("col").get<int>();
        s.alive = a.at("alive").get<bool>();
        s.emotion = a.at("e").get<double>();
        s.force = a.at("f").get<double>();
        if (a.contains("strategy")) {
          const std::string str = a["strategy"].get<std::string>();
          if (str == "cooperation")
            s.strategy = Strategy::Cooperation;
          else if (str == "defection")
            s.strategy = Strategy::Defection;
          else
            throw Error(ErrorKind::Parse, where + ": unknown strategy");
        }
        snap.agents.push_back(s);
      }
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::Parse,
                  where + ": bad snapshot: " + std::string(ex.what()));
    }
    trace.ticks.push_back(std::move(snap));
  }
  return trace;
}

}  // namespace acsee
