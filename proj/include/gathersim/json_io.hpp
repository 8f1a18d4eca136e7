#ifndef GATHERSIM_JSON_IO_HPP
#define GATHERSIM_JSON_IO_HPP

#include <string>

#include "gathersim/algos.hpp"
#include "gathersim/orbit_analysis.hpp"
#include "gathersim/sim.hpp"

namespace gathersim {

// Structured documents (JSON) with versioned schema strings. Field names are
// stable; vertex ids use the input labeling.

std::string analyze_document(const Graph& g, const TerminalReport& report);

std::string trace_document(const Graph& g, const SimulationResult& result);

// Runs the transition checker over a persisted trace document; returns the
// conformance document. Throws ParseError on malformed input.
std::string check_trace_document(const std::string& trace_json);

// Convenience for tools: pull the per-round task labels out of a trace
// document.
std::vector<std::string> trace_round_tasks(const std::string& trace_json);

}  // namespace gathersim

#endif  // GATHERSIM_JSON_IO_HPP
