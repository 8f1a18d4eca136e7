#include "gathersim/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace gathersim {

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (auto b : bits_) c += std::popcount(b);
  return c;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

Vertex VertexSet::min_vertex() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
  return -1;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & o.bits_[i]) return true;
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<int> colors) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("color list length differs from vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge rejected");
  }
  g.m_ = static_cast<int>(edges.size());
  if (!colors.empty()) {
    for (int c : colors)
      if (c < 0) throw std::invalid_argument("colors must be non-negative");
    g.colors_ = std::move(colors);
    g.has_colors_ = true;
  }
  return g;
}

Graph Graph::connected_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<int> colors) {
  Graph g = from_edges(n, edges, std::move(colors));
  require_connected(g);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto d = distances_from(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(m_);
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  std::vector<int> cols;
  if (has_colors_) {
    cols.assign(n_, 0);
    for (int v = 0; v < n_; ++v) cols[perm[v]] = colors_[v];
  }
  return from_edges(n_, es, std::move(cols));
}

Graph Graph::with_colors(std::vector<int> colors) const {
  return from_edges(n_, edges(), std::move(colors));
}

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected())
    throw DisconnectedGraphError(std::string(what) + " must be connected");
}

std::vector<int> distances_from(const Graph& g, Vertex s) {
  if (s < 0 || s >= g.vertex_count()) throw std::invalid_argument("invalid source vertex");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto d = distances_from(g, v);
    for (int x : d) {
      if (x < 0) throw DisconnectedGraphError("diameter of disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  if (within.empty()) throw std::invalid_argument("component query over empty set");
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  for (Vertex s : within.to_vector()) {
    if (seen[s]) continue;
    VertexSet comp(n);
    std::deque<Vertex> q{s};
    seen[s] = 1;
    comp.insert(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(v))
        if (within.contains(w) && !seen[w]) {
          seen[w] = 1;
          comp.insert(w);
          q.push_back(w);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

VertexSet cut_vertices(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet out(n);
  std::vector<int> low(n, -1), pre(n, -1);
  int counter = 0;
  // Iterative Tarjan lowlink; recursion depth could hit n.
  struct Frame {
    Vertex v, parent;
    std::size_t next = 0;
    int children = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (pre[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1}};
    pre[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (pre[w] < 0) {
          pre[w] = low[w] = counter++;
          f.children++;
          stack.push_back({w, f.v});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], pre[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (p.parent != -1 && low[done.v] >= pre[p.v]) out.insert(p.v);
        }
        if (done.parent == -1 && done.children > 1) out.insert(done.v);
      }
    }
  }
  return out;
}

VertexSet universal_vertices(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet out(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) out.insert(v);
  return out;
}

namespace {

std::vector<VertexSet> twin_classes(const Graph& g, bool closed) {
  const int n = g.vertex_count();
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> key(g.neighbors(v).begin(), g.neighbors(v).end());
    if (closed) {
      key.push_back(v);
      std::sort(key.begin(), key.end());
    }
    groups[std::move(key)].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [key, vs] : groups) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> false_twin_classes(const Graph& g) { return twin_classes(g, false); }
std::vector<VertexSet> true_twin_classes(const Graph& g) { return twin_classes(g, true); }

std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex u, Vertex v,
                                           const VertexSet& forbidden,
                                           std::span<const int> priority) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("invalid path endpoint");
  if (u != v && forbidden.contains(u))
    throw std::invalid_argument("path source lies in the forbidden set");
  if (u == v) return Path{{u}};

  auto allowed = [&](Vertex x) { return x == u || x == v || !forbidden.contains(x); };
  // Backward BFS from v over allowed vertices gives distance-to-target.
  std::vector<int> dist(n, -1);
  std::deque<Vertex> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(x))
      if (allowed(w) && dist[w] < 0) {
        dist[w] = dist[x] + 1;
        q.push_back(w);
      }
  }
  if (dist[u] < 0) return std::nullopt;

  auto rank = [&](Vertex x) { return priority.empty() ? x : priority[x]; };
  Path p;
  p.vertices.push_back(u);
  Vertex cur = u;
  while (cur != v) {
    Vertex best = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!allowed(w) || dist[w] != dist[cur] - 1) continue;
      if (best < 0 || rank(w) < rank(best)) best = w;
    }
    cur = best;
    p.vertices.push_back(cur);
  }
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  InducedSubgraph sub;
  sub.to_parent = vs.to_vector();
  if (sub.to_parent.empty()) throw std::invalid_argument("induced subgraph over empty set");
  sub.from_parent.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    sub.from_parent[sub.to_parent[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (Vertex u : sub.to_parent)
    for (Vertex w : g.neighbors(u))
      if (u < w && vs.contains(w)) es.emplace_back(sub.from_parent[u], sub.from_parent[w]);
  std::vector<int> cols;
  if (g.colored()) {
    cols.reserve(sub.to_parent.size());
    for (Vertex u : sub.to_parent) cols.push_back(g.color(u));
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), es, std::move(cols));
  return sub;
}

std::vector<int> distances_to_set(const Graph& g, const VertexSet& targets) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> q;
  for (Vertex v : targets.to_vector()) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (n < 0) {
      try {
        n = std::stoi(first);
      } catch (const std::exception&) {
        throw ParseError("line 1: expected vertex count");
      }
      if (n < 1) throw ParseError("line 1: vertex count must be positive");
      int extra;
      if (ls >> extra) throw ParseError("line 1: expected vertex count only");
      continue;
    }
    if (first == "colors") {
      colors.clear();
      int c;
      while (ls >> c) colors.push_back(c);
      if (static_cast<int>(colors.size()) != n)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                         " colors");
      continue;
    }
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": expected an edge `u v`");
    }
    if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected an edge `u v`");
    int extra;
    if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("empty graph text");
  try {
    return Graph::from_edges(n, edges, std::move(colors));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  if (g.colored()) {
    out << "colors";
    for (int v = 0; v < g.vertex_count(); ++v) out << " " << g.color(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace gathersim
