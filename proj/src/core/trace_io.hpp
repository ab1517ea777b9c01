#pragma once

#include <string>

#include "core/types.hpp"

namespace acsee {

// JSON-lines trace format: a header object (schema, grid, seed) followed by
// one snapshot object per tick.
void write_trace_jsonl(const SimulationTrace& trace, const std::string& path);

// Inverse of write_trace_jsonl. Throws Error(Io) on unreadable files and
// Error(Parse) on malformed or wrong-schema content.
SimulationTrace read_trace_jsonl(const std::string& path);

}  // namespace acsee
