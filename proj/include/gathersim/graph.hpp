#ifndef GATHERSIM_GRAPH_HPP
#define GATHERSIM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gathersim {

using Vertex = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedGraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Membership set over a fixed vertex universe 0..n-1, bitmask backed.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<Vertex> vs);

  int universe() const { return n_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) {
    check(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> to_vector() const;
  Vertex min_vertex() const;  // -1 when empty

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const = default;

  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Walk in a graph; consecutive vertices adjacent, no vertex repeated.
struct Path {
  std::vector<Vertex> vertices;
  int hops() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Simple undirected graph with optional per-vertex small-integer colors.
/// Vertex ids are dense 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity (no loops, no duplicate edges) but not connectivity;
  // component analysis needs induced disconnected subgraphs.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<int> colors = {});
  // Same, but rejects disconnected input. Simulation entry point.
  static Graph connected_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<int> colors = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  int degree(Vertex v) const {
    check(v);
    return static_cast<int>(adj_[v].size());
  }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_connected() const;

  bool colored() const { return has_colors_; }
  int color(Vertex v) const {
    check(v);
    return colors_.empty() ? 0 : colors_[v];
  }
  const std::vector<int>& colors() const { return colors_; }

  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  // Image of this graph under perm (perm[v] = new id of v); colors carried along.
  Graph relabeled(const std::vector<int>& perm) const;
  Graph with_colors(std::vector<int> colors) const;

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> colors_;
  bool has_colors_ = false;
};

void require_connected(const Graph& g, const char* what = "graph");

// BFS hop counts from s; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex s);

// Max distance over all pairs. Throws DisconnectedGraphError on disconnected input.
int diameter(const Graph& g);

// Maximal connected pieces of the subgraph induced by `within`, as sets of
// host-graph vertex ids. `within` must be nonempty.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

// Articulation points.
VertexSet cut_vertices(const Graph& g);

VertexSet universal_vertices(const Graph& g);
std::vector<VertexSet> false_twin_classes(const Graph& g);  // N(u) == N(v)
std::vector<VertexSet> true_twin_classes(const Graph& g);   // N[u] == N[v]

// Shortest u,v-path whose interior avoids `forbidden` (v itself may be
// forbidden; u must not be, unless u == v). Among equal-length paths picks the
// one whose vertex sequence is lexicographically minimal under `priority`
// (vertex -> rank; callers pass canonical labels, empty means input ids).
// Absence is a value, not an error.
std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex u, Vertex v,
                                           const VertexSet& forbidden,
                                           std::span<const int> priority = {});

// Induced subgraph plus the vertex id maps between it and the host graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;   // sub id -> host id
  std::vector<int> from_parent;    // host id -> sub id, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

// Multi-source BFS: hop count to the nearest vertex of `targets` (-1 unreachable).
std::vector<int> distances_to_set(const Graph& g, const VertexSet& targets);

// Text format: first line `n`, one `u v` line per edge, optional trailing
// `colors c0 c1 ... c{n-1}` line. Rejects duplicate edges and self-loops.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

}  // namespace gathersim

#endif  // GATHERSIM_GRAPH_HPP
