#ifndef GATHERSIM_ORBIT_ANALYSIS_HPP
#define GATHERSIM_ORBIT_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "gathersim/canon.hpp"
#include "gathersim/graph.hpp"

namespace gathersim {

// An orbit O is terminal when every vertex outside O can reach any v in O by
// a path meeting O only at v; equivalently, removing all but one vertex of O
// leaves a connected induced subgraph. Checks every v in O and demands the
// answers agree (a free consistency check on the orbit computation).
bool is_terminal(const Graph& g, const VertexSet& orbit);

// Pair (u, v) certifying non-terminality: u outside the orbit cannot reach v
// without touching another orbit vertex.
struct NonTerminalWitness {
  Vertex u = -1;
  Vertex v = -1;
};
std::optional<NonTerminalWitness> non_terminal_witness(const Graph& g, const VertexSet& orbit);

// The terminal orbit minimal in the canonical orbit order; absent when the
// graph has none. Rejects vertex-transitive input.
std::optional<int> smallest_terminal_orbit_index(const Graph& g, const OrbitPartition& orbits);

// Does some proper nonempty subset of orbits induce a connected subgraph?
// Subset enumeration; guarded against graphs with more than 20 orbits.
bool has_connected_proper_orbit_subset(const Graph& g, const OrbitPartition& orbits);

struct StructuralPredicates {
  bool has_universal = false;
  bool has_cut_vertex = false;
  bool has_twin_orbit = false;  // some orbit of size >= 2, pairwise false or true twins
  bool has_connected_proper_orbit_subset = false;

  bool any() const {
    return has_universal || has_cut_vertex || has_twin_orbit || has_connected_proper_orbit_subset;
  }
};
StructuralPredicates structural_predicates(const Graph& g, const OrbitPartition& orbits);

struct OrbitReport {
  std::vector<Vertex> vertices;
  int min_canonical_label = -1;
  bool terminal = false;
  std::optional<NonTerminalWitness> witness;
};

struct TerminalReport {
  bool vertex_transitive = false;
  std::vector<OrbitReport> orbits;  // canonical order
  StructuralPredicates predicates;
  std::optional<int> smallest_terminal;  // orbit index
  // Each true predicate flag must co-occur with a terminal orbit; recorded,
  // not assumed, so a false here flags an implementation defect.
  bool predicates_imply_terminal = true;
};
TerminalReport analyze_graph(const Graph& g);

// First orbit in canonical order and the earliest orbit adjacent to it.
// Rejects vertex-transitive input.
struct TargetOrbits {
  VertexSet o1, o2;
  int o1_index = -1, o2_index = -1;
};
TargetOrbits select_target_orbits(const Graph& g, const OrbitPartition& orbits);

// Subgraph the robots confine themselves to: one connected component CC of
// G[O2] plus every O1 vertex adjacent to it, 2-colored by origin (0 = O1,
// 1 = O2). Guarantees a terminal orbit inside the O1-colored class; a failure
// of that guarantee throws (theory/implementation mismatch).
struct ConfinementSubgraph {
  InducedSubgraph sub;          // colored
  VertexSet vertices;           // in host ids
  CanonResult canon;            // canonization of the colored subgraph
  int terminal_orbit_index = -1;  // smallest terminal orbit of the subgraph
};
ConfinementSubgraph confinement_subgraph(const Graph& g, const VertexSet& o1, const VertexSet& o2,
                                         const VertexSet& cc);

}  // namespace gathersim

#endif  // GATHERSIM_ORBIT_ANALYSIS_HPP
