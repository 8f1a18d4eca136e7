// Independent brute-force oracles for the test suites. Everything here takes
// the dumbest correct route on purpose and stays clear of the implementation
// paths it checks.
#ifndef GATHERSIM_TESTS_ORACLES_HPP
#define GATHERSIM_TESTS_ORACLES_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gathersim/graph.hpp"

namespace oracles {

using gathersim::Graph;
using gathersim::Vertex;
using gathersim::VertexSet;

constexpr int kUnreach = 1 << 20;

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreach));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Connectivity by label propagation over an allowed set.
inline bool connected_within(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.vertex_count();
  int start = -1, total = 0;
  for (int v = 0; v < n; ++v)
    if (allowed[v]) {
      if (start < 0) start = v;
      ++total;
    }
  if (total == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<Vertex> q{start};
  seen[start] = 1;
  int visited = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push_back(w);
      }
  }
  return visited == total;
}

// Articulation points by remove-and-test.
inline VertexSet articulation_oracle(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet out(n);
  if (n <= 2) return out;
  for (int v = 0; v < n; ++v) {
    std::vector<char> allowed(n, 1);
    allowed[v] = 0;
    if (!connected_within(g, allowed)) out.insert(v);
  }
  return out;
}

// Components of an induced subgraph by union-find.
inline std::vector<VertexSet> components_oracle(const Graph& g, const VertexSet& within) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges())
    if (within.contains(u) && within.contains(v)) parent[find(u)] = find(v);
  std::map<int, VertexSet> comps;
  for (Vertex v : within.to_vector()) {
    auto [it, fresh] = comps.try_emplace(find(v), VertexSet(n));
    it->second.insert(v);
  }
  std::vector<VertexSet> out;
  for (auto& [root, s] : comps) out.push_back(std::move(s));
  return out;
}

// Distance from u to v when the interior of the path must avoid `forbidden`.
inline int avoid_distance_oracle(const Graph& g, Vertex u, Vertex v, const VertexSet& forbidden) {
  const int n = g.vertex_count();
  if (u == v) return 0;
  std::vector<int> dist(n, -1);
  std::deque<Vertex> q{u};
  dist[u] = 0;
  auto allowed = [&](Vertex x) { return x == u || x == v || !forbidden.contains(x); };
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(x))
      if (allowed(w) && dist[w] < 0) {
        dist[w] = dist[x] + 1;
        q.push_back(w);
      }
  }
  return dist[v];
}

// Uniform-ish random connected graph: random spanning tree plus coin-flip
// extra edges. Independent of the library's generators.
inline Graph random_connected_graph(int n, std::mt19937_64& rng, double extra_p = 0.3) {
  std::vector<std::pair<int, int>> es;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    es.emplace_back(u, v);
    have[u][v] = have[v][u] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have[u][v] && (rng() % 1000) < extra_p * 1000) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

}  // namespace oracles

#endif  // GATHERSIM_TESTS_ORACLES_HPP
