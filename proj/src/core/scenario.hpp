#pragma once

#include <string>

#include "core/rng.hpp"
#include "core/types.hpp"

namespace acsee {

// Parses scenario JSON text. Strict: unknown keys anywhere are an error.
// Throws Error(Parse) on malformed input, Error(Validation)/Error(Capacity)
// via validate() on a well-formed but inconsistent config.
ScenarioConfig parse_scenario(const std::string& json_text);

// Reads and parses a scenario file. Throws Error(Io) if unreadable.
ScenarioConfig load_scenario(const std::string& path);

// Canonical JSON echo of a config; parse_scenario(serialize_scenario(c))
// round-trips exactly.
std::string serialize_scenario(const ScenarioConfig& config);

// Places pinned agents first, then samples the counted ones (civilians,
// activists, cops in that order) uniformly over the remaining empty cells.
// Per-agent draw order: position, warn threshold, warn limit, 3 chromosome
// bits. Throws Error(Capacity) when agents outnumber cells.
SimState init_state(const ScenarioConfig& config, Rng& rng);

}  // namespace acsee
