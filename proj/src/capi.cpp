#include "gathersim.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gathersim/families.hpp"
#include "gathersim/json_io.hpp"
#include "gathersim/orbit_analysis.hpp"
#include "gathersim/sim.hpp"

using namespace gathersim;

struct gs_graph {
  Graph graph;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gs_status fail(gs_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Exceptions from the core map onto status codes here; the message is kept
// for gs_last_error().
template <typename Fn>
gs_status guarded(Fn&& fn) {
  try {
    fn();
    return GS_OK;
  } catch (const ParseError& e) {
    return fail(GS_ERR_PARSE, e.what());
  } catch (const DisconnectedGraphError& e) {
    return fail(GS_ERR_DISCONNECTED, e.what());
  } catch (const SimulationError& e) {
    return fail(GS_ERR_SIMULATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GS_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* gs_version(void) { return "0.1.0"; }

const char* gs_last_error(void) { return g_last_error.c_str(); }

gs_status gs_graph_parse(const char* text, gs_graph** out) {
  if (!text || !out) return fail(GS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new gs_graph{parse_graph_text(text)}; });
}

gs_status gs_graph_generate(const char* family, const char* const* params, int nparams,
                            unsigned long long seed, gs_graph** out) {
  if (!family || !out || (nparams > 0 && !params))
    return fail(GS_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> ps;
    for (int i = 0; i < nparams; ++i) ps.emplace_back(params[i]);
    *out = new gs_graph{generate_family(family, ps, seed)};
  });
}

void gs_graph_free(gs_graph* g) { delete g; }

int gs_graph_vertex_count(const gs_graph* g) { return g ? g->graph.vertex_count() : -1; }

int gs_graph_edge_count(const gs_graph* g) { return g ? g->graph.edge_count() : -1; }

gs_status gs_graph_to_text(const gs_graph* g, char** out_text) {
  if (!g || !out_text) return fail(GS_ERR_INVALID_ARGUMENT, "null argument");
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_string(graph_to_text(g->graph)); });
}

gs_status gs_analyze_json(const gs_graph* g, char** out_json) {
  if (!g || !out_json) return fail(GS_ERR_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    auto report = analyze_graph(g->graph);
    *out_json = dup_string(analyze_document(g->graph, report));
  });
}

gs_status gs_simulate_json(const gs_graph* g, const int* robots, int robot_count,
                           const char* algo, unsigned long long seed, const char* adversary,
                           int max_epochs, int double_eval, char** out_json) {
  if (!g || !robots || robot_count < 1 || !algo || !adversary || !out_json)
    return fail(GS_ERR_INVALID_ARGUMENT, "null or empty argument");
  *out_json = nullptr;
  return guarded([&] {
    auto mode = adversary_mode_from_name(adversary);
    if (!mode) throw std::invalid_argument("adversary must be 'fixed' or 'per-epoch'");
    SimulationRequest req;
    req.graph = g->graph;
    req.robots.assign(robots, robots + robot_count);
    req.algo = algo;
    req.seed = seed;
    req.mode = *mode;
    req.max_epochs = max_epochs;
    req.double_eval = double_eval != 0;
    auto result = simulate(req);
    *out_json = dup_string(trace_document(g->graph, result));
  });
}

gs_status gs_check_trace_json(const char* trace_json, char** out_json) {
  if (!trace_json || !out_json) return fail(GS_ERR_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = dup_string(check_trace_document(trace_json)); });
}

void gs_string_free(char* s) { std::free(s); }

}  // extern "C"
