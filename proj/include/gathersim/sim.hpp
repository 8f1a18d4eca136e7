#ifndef GATHERSIM_SIM_HPP
#define GATHERSIM_SIM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gathersim/graph.hpp"

namespace gathersim {

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact robot placement. Index = engine-internal robot id; repeats encode
/// multiplicities. Never exposed to the algorithms.
struct Placement {
  std::vector<Vertex> positions;
  int count() const { return static_cast<int>(positions.size()); }
};

/// What robots can perceive: the occupancy indicator only. Multiplicities
/// are erased.
struct Configuration {
  VertexSet occupied;
  int occ() const { return occupied.size(); }
  bool final_config() const { return occ() == 1; }
};

Configuration snapshot(const Graph& g, const Placement& p);

// Max distance among occupied vertices; 0 when a single vertex is occupied.
int occupied_spread(const Graph& g, const Configuration& c);

/// One robot's Look-phase result: the graph, the occupancy map and its own
/// position, all transported through a per-activation relabeling. No robot
/// identities, no multiplicities, no history.
struct View {
  Graph graph;
  VertexSet occupied;
  Vertex self = -1;
};

View make_view(const Graph& g, const Configuration& c, Vertex pos,
               const std::vector<int>& relabeling);

enum class AdversaryMode { fixed_order, per_epoch_order };

const char* adversary_mode_name(AdversaryMode m);
std::optional<AdversaryMode> adversary_mode_from_name(const std::string& s);

/// Seeded adversarial scheduler. Each epoch activates every robot exactly
/// once; fixed mode repeats one permutation, per-epoch mode redraws it.
struct Adversary {
  std::uint64_t seed = 0;
  AdversaryMode mode = AdversaryMode::fixed_order;
};

/// Engine-side ground-truth classification of one round, attached to the
/// trace for conformance checking. Robots recompute tasks from their views.
struct RoundLabel {
  std::string task;
  std::vector<Vertex> rear_vertices;  // multiplicity-trickle roles, when present
};

/// A gathering algorithm as the engine sees it: a pure view-to-move function
/// plus a configuration classifier for trace labels. `tracked_orbit` is the
/// second target orbit of the nonterminal algorithm (robot-count accounting);
/// empty universe when unused.
struct GatherAlgorithm {
  std::string name;
  std::function<Vertex(const View&)> move;
  std::function<RoundLabel(const Configuration&)> classify;
  VertexSet tracked_orbit;
};

struct RoundRecord {
  int epoch = 0;
  int round = 0;  // global round index, 0-based
  int robot = 0;
  std::vector<Vertex> occupied;  // lambda before the move, input labeling
  std::string task;
  Vertex from = -1;
  Vertex to = -1;
  int robots_on_tracked = -1;  // ground-truth count on the tracked orbit
};

enum class Outcome { gathered, epoch_cap_exceeded };

struct ExecutionTrace {
  std::string algorithm;
  std::uint64_t seed = 0;
  AdversaryMode mode = AdversaryMode::fixed_order;
  int epoch_cap = 0;
  int robot_count = 0;
  int vertex_count = 0;
  std::vector<Vertex> initial_positions;
  int initial_occ = 0;
  int initial_delta = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome = Outcome::epoch_cap_exceeded;
  int epochs = 0;           // completed epochs until gathering (or the cap)
  Vertex gathered_at = -1;  // -1 unless gathered
  int double_checked = 0;   // activations verified under two relabelings
  std::vector<std::string> invariant_violations;
};

struct RunOptions {
  int max_epochs = 0;       // 0 = default cap
  bool double_eval = false; // equivariance mode: evaluate twice, compare
};

// Generous multiple of the worst-case epoch bound; exceeding it signals a
// bug, not a slow run.
int default_epoch_cap(const Graph& g, const Placement& p0);

// Round-robin execution until the configuration is final or the cap is hit.
// After gathering, one extra epoch is simulated to confirm that no robot
// moves. Deterministic given (g, p0, algorithm, seed, mode, options).
ExecutionTrace run(const Graph& g, const Placement& p0, const GatherAlgorithm& algo,
                   const Adversary& adv, const RunOptions& opts = {});

/// Everything needed to reproduce a run bit-exactly, plus the bound checks
/// the harness reports alongside the trace.
struct SimulationRequest {
  Graph graph;
  std::vector<Vertex> robots;
  std::string algo = "auto";  // auto | terminal | nonterminal
  std::uint64_t seed = 0;
  AdversaryMode mode = AdversaryMode::fixed_order;
  int max_epochs = 0;
  bool double_eval = false;
};

struct SimulationResult {
  ExecutionTrace trace;
  std::string algorithm;              // resolved choice
  int lower_bound = 0;                // ceil(delta0 / 2)
  bool lower_bound_ok = true;
  std::optional<int> terminal_bound;  // 2 + reach bound, terminal runs only
  bool terminal_bound_ok = true;
};

SimulationResult simulate(const SimulationRequest& req);

}  // namespace gathersim

#endif  // GATHERSIM_SIM_HPP
