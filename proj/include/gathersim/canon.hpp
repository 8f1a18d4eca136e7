#ifndef GATHERSIM_CANON_HPP
#define GATHERSIM_CANON_HPP

#include <string>
#include <vector>

#include "gathersim/graph.hpp"

namespace gathersim {

/// Isomorphism-invariant labeling of a graph. Two graphs get equal
/// certificates exactly when they are isomorphic (color-preserving when
/// colors are present).
struct CanonicalForm {
  std::vector<int> labeling;                       // vertex -> canonical position
  std::vector<std::pair<int, int>> canonical_edges;  // sorted, under the labeling
  std::vector<int> canonical_colors;               // color by canonical position

  std::string certificate() const;      // compact equality key
  std::string certificate_hex() const;  // hex-encoded edge list for reports
  bool operator==(const CanonicalForm& o) const {
    return canonical_edges == o.canonical_edges && canonical_colors == o.canonical_colors;
  }
};

/// Orbits of Aut(G) on V, as a partition ordered by the smallest canonical
/// label each orbit receives. The vector position of an orbit is its order
/// index; all robots agree on this order regardless of input labeling.
struct OrbitPartition {
  std::vector<VertexSet> orbits;  // ascending by min canonical label
  std::vector<int> orbit_of;      // vertex -> orbit index

  int count() const { return static_cast<int>(orbits.size()); }
};

/// One search, both artifacts. The orbit computation reuses the automorphisms
/// discovered while canonizing.
struct CanonResult {
  CanonicalForm form;
  OrbitPartition orbits;
};

CanonResult canonize(const Graph& g);

CanonicalForm canonical_form(const Graph& g);
OrbitPartition automorphism_orbits(const Graph& g);

// Test oracle: orbits by filtering all n! bijections. Rejects n > 8.
OrbitPartition orbits_bruteforce(const Graph& g);

bool is_vertex_transitive(const Graph& g);

}  // namespace gathersim

#endif  // GATHERSIM_CANON_HPP
