#ifndef GATHERSIM_ALGOS_HPP
#define GATHERSIM_ALGOS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gathersim/canon.hpp"
#include "gathersim/graph.hpp"
#include "gathersim/orbit_analysis.hpp"
#include "gathersim/sim.hpp"

namespace gathersim {

/// Task identifiers. Classification is a function of the configuration only,
/// so every robot in a round agrees on the task.
enum class Task {
  at_t1,  // terminal algorithm: target orbit multiply occupied
  at_t2,  // terminal algorithm: target orbit occupied at one vertex
  at_t3,  // terminal algorithm: target orbit unoccupied
  t1,     // nonterminal: catch-all, robots converge on O1
  t2_i,   // all robots in O1
  t2_ii,  // robots in O1 plus one occupied component CC of G[O2]
  t2_iii, // one traveller (front) en route to CC
  t2_iv,  // traveller split off a multiplicity: rear trickles onto front
  t3_i,   // two occupied components of G[O2], single heads
  t3_ii,  // two occupied components, one side carries a rear
  t3_iii, // two occupied components, both sides carry rears
  t4,     // all robots confined to a subgraph with a terminal orbit
  final_task,
};

std::string_view task_name(Task t);
std::optional<Task> task_from_name(std::string_view name);

Task classify_terminal_task(const Configuration& c, const VertexSet& target_orbit);

/// Full classification context for the nonterminal algorithm: the matched
/// task plus the role vertices the moves and the engine checks refer to.
struct NonTerminalContext {
  Task task = Task::t1;
  VertexSet o1, o2;
  VertexSet f;                        // occupied ∩ O1
  VertexSet cc;                       // matched component of G[O2] (pre_2 / pre_4)
  VertexSet u;                        // occupied ∩ cc
  std::optional<Vertex> front, rear;  // M roles (pre_2 iii / iv)
  VertexSet cc1, cc2;                 // pre_3 components, canonical order
  std::optional<Vertex> head1, rear1, head2, rear2;
  VertexSet gprime;                   // pre_4 confinement vertices
};

// Preconditions evaluated in reverse order (pre_4, pre_3, pre_2, then the
// catch-all); the first match wins. Total: always returns a task.
NonTerminalContext classify_nonterminal(const Graph& g, const VertexSet& occupied,
                                        const CanonResult& canon, const TargetOrbits& targets);

// Robot-side move functions; pure functions of the view. Both return the own
// position for a nil move.
Vertex terminal_move(const View& view);
Vertex nonterminal_move(const View& view);

// Engine bundles. Throw std::invalid_argument when the graph does not meet
// the algorithm's precondition (vertex-transitive, or wrong terminal side).
GatherAlgorithm make_terminal_algorithm(const Graph& g);
GatherAlgorithm make_nonterminal_algorithm(const Graph& g);
GatherAlgorithm make_auto_algorithm(const Graph& g);
std::string choose_algorithm_name(const Graph& g);  // "terminal" | "nonterminal"

// Max over v in the orbit and u anywhere of the orbit-avoiding travel
// distance from u to v (vertices inside the orbit first step out). The
// harness bound: a gathered terminal-algorithm run takes at most 2 + this
// many epochs on the tested families.
int terminal_reach_bound(const Graph& g, const VertexSet& orbit);

struct TransitionViolation {
  int round = -1;  // index of the later round of the offending pair
  std::string from, to;
  std::string reason;
};

struct ConformanceReport {
  std::vector<TransitionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Validates consecutive pairs of distinct task labels against the transition
// graph (terminal-algorithm labels get the engine's own graph). Violations
// are report content, not errors.
ConformanceReport check_transitions(const std::vector<std::string>& round_tasks);

}  // namespace gathersim

#endif  // GATHERSIM_ALGOS_HPP
