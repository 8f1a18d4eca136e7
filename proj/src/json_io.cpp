#include "gathersim/json_io.hpp"

#include <json.hpp>

namespace gathersim {

using nlohmann::json;

namespace {

json graph_block(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  json block{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (g.colored()) block["colors"] = g.colors();
  return block;
}

}  // namespace

std::string analyze_document(const Graph& g, const TerminalReport& report) {
  json doc;
  doc["schema"] = "gathersim.analyze/1";
  doc["graph"] = graph_block(g);
  doc["vertex_transitive"] = report.vertex_transitive;
  doc["certificate"] = canonical_form(g).certificate_hex();
  json orbits = json::array();
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    const auto& o = report.orbits[i];
    json entry{{"index", i},
               {"vertices", o.vertices},
               {"min_canonical_label", o.min_canonical_label}};
    if (!report.vertex_transitive) {
      entry["terminal"] = o.terminal;
      if (o.witness)
        entry["witness"] = json{{"u", o.witness->u}, {"v", o.witness->v}, {"orbit", i}};
    }
    orbits.push_back(std::move(entry));
  }
  doc["orbits"] = std::move(orbits);
  if (!report.vertex_transitive) {
    doc["predicates"] = json{
        {"has_universal", report.predicates.has_universal},
        {"has_cut_vertex", report.predicates.has_cut_vertex},
        {"has_twin_orbit", report.predicates.has_twin_orbit},
        {"has_connected_proper_orbit_subset",
         report.predicates.has_connected_proper_orbit_subset}};
    doc["has_terminal_orbit"] = report.smallest_terminal.has_value();
    if (report.smallest_terminal) doc["smallest_terminal_orbit"] = *report.smallest_terminal;
    doc["predicates_imply_terminal"] = report.predicates_imply_terminal;
  }
  return doc.dump(2);
}

std::string trace_document(const Graph& g, const SimulationResult& result) {
  const ExecutionTrace& t = result.trace;
  json doc;
  doc["schema"] = "gathersim.trace/1";
  doc["manifest"] = json{{"algorithm_requested", result.algorithm},
                         {"seed", t.seed},
                         {"adversary", adversary_mode_name(t.mode)},
                         {"epoch_cap", t.epoch_cap},
                         {"robots", t.initial_positions},
                         {"rng", "mt19937_64"},
                         {"version", "0.1.0"}};
  doc["graph"] = graph_block(g);
  doc["algorithm"] = t.algorithm;
  doc["initial"] =
      json{{"occ", t.initial_occ}, {"delta", t.initial_delta}, {"diameter", diameter(g)}};
  doc["outcome"] = t.outcome == Outcome::gathered ? "gathered" : "epoch-cap-exceeded";
  doc["epochs"] = t.epochs;
  if (t.gathered_at >= 0) doc["gathered_at"] = t.gathered_at;
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json rec{{"epoch", r.epoch}, {"round", r.round},   {"robot", r.robot},
             {"occupied", r.occupied}, {"task", r.task}, {"from", r.from},
             {"to", r.to}};
    if (r.robots_on_tracked >= 0) rec["robots_on_tracked"] = r.robots_on_tracked;
    rounds.push_back(std::move(rec));
  }
  doc["rounds"] = std::move(rounds);
  doc["double_checked"] = t.double_checked;
  doc["invariant_violations"] = t.invariant_violations;
  json bounds{{"lower_epochs", result.lower_bound}, {"lower_ok", result.lower_bound_ok}};
  if (result.terminal_bound) {
    bounds["upper_epochs"] = *result.terminal_bound;
    bounds["upper_ok"] = result.terminal_bound_ok;
  }
  doc["bounds"] = std::move(bounds);
  return doc.dump(2);
}

std::vector<std::string> trace_round_tasks(const std::string& trace_json) {
  json doc = json::parse(trace_json, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed trace document");
  if (!doc.contains("rounds") || !doc["rounds"].is_array())
    throw ParseError("trace document lacks a rounds array");
  std::vector<std::string> tasks;
  for (const auto& r : doc["rounds"]) {
    if (!r.contains("task") || !r["task"].is_string())
      throw ParseError("trace round lacks a task label");
    tasks.push_back(r["task"].get<std::string>());
  }
  return tasks;
}

std::string check_trace_document(const std::string& trace_json) {
  auto tasks = trace_round_tasks(trace_json);
  auto report = check_transitions(tasks);
  json doc;
  doc["schema"] = "gathersim.check/1";
  doc["rounds"] = tasks.size();
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(json{
        {"round", v.round}, {"from", v.from}, {"to", v.to}, {"reason", v.reason}});
  doc["violations"] = std::move(violations);
  doc["ok"] = report.ok();
  return doc.dump(2);
}

}  // namespace gathersim
