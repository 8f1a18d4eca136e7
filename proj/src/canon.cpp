#include "gathersim/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace gathersim {

namespace {

// Ordered partition of the vertex set. Cell order is structural: it starts
// from color classes sorted by color value and refinement only ever splits a
// cell in place, so the order is invariant under relabeling.
struct Partition {
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> cell_of;

  bool discrete() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const auto& c) { return c.size() == 1; });
  }
  void reindex() {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (Vertex v : cells[i]) cell_of[v] = static_cast<int>(i);
  }
};

Partition initial_partition(const Graph& g) {
  const int n = g.vertex_count();
  std::map<int, std::vector<Vertex>> by_color;
  for (int v = 0; v < n; ++v) by_color[g.color(v)].push_back(v);
  Partition p;
  p.cell_of.assign(n, 0);
  for (auto& [c, vs] : by_color) p.cells.push_back(std::move(vs));
  p.reindex();
  return p;
}

// Equitable refinement to fixpoint: split every cell by the vector of
// neighbor counts into each cell, subcells ordered by ascending count
// signature. Deterministic and isomorphism-invariant.
void refine(const Graph& g, Partition& p) {
  const int n = g.vertex_count();
  std::vector<int> counts(n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Vertex>> next;
    next.reserve(p.cells.size());
    for (const auto& cell : p.cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      // Signature of v = (|N(v) ∩ cell_0|, |N(v) ∩ cell_1|, ...).
      std::map<std::vector<int>, std::vector<Vertex>> split;
      for (Vertex v : cell) {
        std::vector<int> sig(p.cells.size(), 0);
        for (Vertex w : g.neighbors(v)) sig[p.cell_of[w]]++;
        split[std::move(sig)].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, vs] : split) next.push_back(std::move(vs));
    }
    p.cells = std::move(next);
    p.reindex();
  }
}

Partition individualized(const Graph& g, const Partition& p, int cell_idx, Vertex v) {
  Partition q;
  q.cell_of.assign(p.cell_of.size(), 0);
  for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
    if (i != cell_idx) {
      q.cells.push_back(p.cells[i]);
      continue;
    }
    std::vector<Vertex> rest;
    for (Vertex w : p.cells[i])
      if (w != v) rest.push_back(w);
    q.cells.push_back({v});
    q.cells.push_back(std::move(rest));
  }
  q.reindex();
  refine(g, q);
  return q;
}

using EdgeCode = std::uint32_t;

std::vector<EdgeCode> leaf_certificate(const Graph& g, const std::vector<int>& labeling) {
  std::vector<EdgeCode> cert;
  cert.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    int a = labeling[u], b = labeling[v];
    if (a > b) std::swap(a, b);
    cert.push_back(static_cast<EdgeCode>(a) << 16 | static_cast<EdgeCode>(b));
  }
  std::sort(cert.begin(), cert.end());
  return cert;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonResult run() {
    Partition root = initial_partition(g_);
    refine(g_, root);
    std::vector<Vertex> prefix;
    dfs(root, prefix);

    CanonResult res;
    res.form.labeling = best_labeling_;
    res.form.canonical_edges.reserve(g_.edge_count());
    for (EdgeCode e : best_cert_)
      res.form.canonical_edges.emplace_back(static_cast<int>(e >> 16),
                                            static_cast<int>(e & 0xffff));
    res.form.canonical_colors.assign(n_, 0);
    for (int v = 0; v < n_; ++v) res.form.canonical_colors[best_labeling_[v]] = g_.color(v);
    res.orbits = orbits_from_generators();
    return res;
  }

 private:
  void dfs(const Partition& p, std::vector<Vertex>& prefix) {
    if (++nodes_ > kNodeBudget)
      throw std::runtime_error("canonization search exceeded node budget");
    if (p.discrete()) {
      handle_leaf(p);
      return;
    }
    int target = -1;
    for (int i = 0; i < static_cast<int>(p.cells.size()); ++i)
      if (p.cells[i].size() > 1) {
        target = i;
        break;
      }
    std::vector<Vertex> tried;
    for (Vertex v : p.cells[target]) {
      if (equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      prefix.push_back(v);
      Partition child = individualized(g_, p, target, v);
      dfs(child, prefix);
      prefix.pop_back();
    }
  }

  void handle_leaf(const Partition& p) {
    std::vector<int> labeling(n_);
    for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) labeling[p.cells[i][0]] = i;
    auto cert = leaf_certificate(g_, labeling);
    if (first_labeling_.empty()) {
      first_labeling_ = labeling;
      first_cert_ = cert;
      best_labeling_ = labeling;
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == first_cert_) record_automorphism(labeling, first_labeling_);
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labeling_ = labeling;
    } else if (cert == best_cert_ && labeling != best_labeling_) {
      record_automorphism(labeling, best_labeling_);
    }
  }

  // Equal leaf certificates witness the automorphism l2^{-1} ∘ l1.
  void record_automorphism(const std::vector<int>& l1, const std::vector<int>& l2) {
    std::vector<int> inv2(n_);
    for (int v = 0; v < n_; ++v) inv2[l2[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv2[l1[v]];
      if (gamma[v] != v) identity = false;
    }
    if (identity) return;
    verify_automorphism(gamma);
    for (const auto& have : generators_)
      if (have == gamma) return;
    generators_.push_back(std::move(gamma));
  }

  void verify_automorphism(const std::vector<int>& gamma) const {
    for (int v = 0; v < n_; ++v)
      if (g_.color(v) != g_.color(gamma[v]))
        throw std::logic_error("canonization produced a color-breaking map");
    for (auto [u, v] : g_.edges())
      if (!g_.adjacent(gamma[u], gamma[v]))
        throw std::logic_error("canonization produced a non-automorphism");
  }

  // v may be skipped if a generator fixing the individualized prefix
  // pointwise maps an already-tried cell vertex onto it: the two subtrees are
  // images of each other and contribute identical certificates.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried,
                           const std::vector<Vertex>& prefix) {
    if (tried.empty() || generators_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (Vertex s : prefix)
        if (gamma[s] != s) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    for (Vertex w : tried)
      if (uf.find(w) == uf.find(v)) return true;
    return false;
  }

  OrbitPartition orbits_from_generators() {
    UnionFind uf(n_);
    for (const auto& gamma : generators_)
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    std::map<int, std::vector<Vertex>> classes;
    for (int v = 0; v < n_; ++v) classes[uf.find(v)].push_back(v);
    std::vector<std::pair<int, VertexSet>> keyed;  // (min canonical label, orbit)
    for (auto& [root, vs] : classes) {
      int key = n_;
      VertexSet s(n_);
      for (Vertex v : vs) {
        key = std::min(key, best_labeling_[v]);
        s.insert(v);
      }
      keyed.emplace_back(key, std::move(s));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    OrbitPartition out;
    out.orbit_of.assign(n_, -1);
    for (auto& [key, s] : keyed) {
      for (Vertex v : s.to_vector()) out.orbit_of[v] = static_cast<int>(out.orbits.size());
      out.orbits.push_back(std::move(s));
    }
    return out;
  }

  static constexpr long kNodeBudget = 2'000'000;

  const Graph& g_;
  int n_;
  long nodes_ = 0;
  std::vector<EdgeCode> best_cert_, first_cert_;
  std::vector<int> best_labeling_, first_labeling_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

std::string CanonicalForm::certificate() const {
  std::ostringstream out;
  out << canonical_colors.size() << ":";
  for (int c : canonical_colors) out << c << ",";
  out << ":";
  for (auto [u, v] : canonical_edges) out << u << "-" << v << ",";
  return out.str();
}

std::string CanonicalForm::certificate_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(canonical_edges.size() * 8);
  for (auto [u, v] : canonical_edges) {
    std::uint32_t code = static_cast<std::uint32_t>(u) << 16 | static_cast<std::uint32_t>(v);
    for (int shift = 28; shift >= 0; shift -= 4) out.push_back(digits[(code >> shift) & 0xf]);
  }
  return out;
}

CanonResult canonize(const Graph& g) { return CanonSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonize(g).form; }

OrbitPartition automorphism_orbits(const Graph& g) { return canonize(g).orbits; }

OrbitPartition orbits_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("brute-force orbits limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto edges = g.edges();
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (g.color(v) != g.color(perm[v])) ok = false;
    for (auto [u, v] : edges) {
      if (!ok) break;
      if (!g.adjacent(perm[u], perm[v])) ok = false;
    }
    if (ok)
      for (int v = 0; v < n; ++v) parent[find(v)] = find(perm[v]);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto labeling = canonical_form(g).labeling;
  std::map<int, std::vector<Vertex>> classes;
  for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
  std::vector<std::pair<int, VertexSet>> keyed;
  for (auto& [root, vs] : classes) {
    int key = n;
    VertexSet s(n);
    for (Vertex v : vs) {
      key = std::min(key, labeling[v]);
      s.insert(v);
    }
    keyed.emplace_back(key, std::move(s));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  OrbitPartition out;
  out.orbit_of.assign(n, -1);
  for (auto& [key, s] : keyed) {
    for (Vertex v : s.to_vector()) out.orbit_of[v] = static_cast<int>(out.orbits.size());
    out.orbits.push_back(std::move(s));
  }
  return out;
}

bool is_vertex_transitive(const Graph& g) { return automorphism_orbits(g).count() == 1; }

}  // namespace gathersim
