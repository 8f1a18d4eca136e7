#include "gathersim/orbit_analysis.hpp"

#include <algorithm>
#include <deque>

namespace gathersim {

namespace {

// Connectivity of G[(V \ orbit) ∪ {keep}].
bool connected_with_single_orbit_vertex(const Graph& g, const VertexSet& orbit, Vertex keep) {
  const int n = g.vertex_count();
  auto allowed = [&](Vertex x) { return x == keep || !orbit.contains(x); };
  int total = n - orbit.size() + 1;
  Vertex start = keep;
  std::vector<char> seen(n, 0);
  std::deque<Vertex> q{start};
  seen[start] = 1;
  int visited = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (allowed(w) && !seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push_back(w);
      }
  }
  return visited == total;
}

}  // namespace

bool is_terminal(const Graph& g, const VertexSet& orbit) {
  if (orbit.empty()) throw std::invalid_argument("terminal test over empty orbit");
  if (orbit.size() == g.vertex_count())
    throw std::invalid_argument("terminal test undefined for the full vertex set");
  bool first = true;
  bool result = false;
  for (Vertex v : orbit.to_vector()) {
    bool ok = connected_with_single_orbit_vertex(g, orbit, v);
    if (first) {
      result = ok;
      first = false;
    } else if (ok != result) {
      // Orbit symmetry forces a uniform answer; disagreement means the
      // claimed orbit is not one.
      throw std::logic_error("terminal test disagreed across an orbit");
    }
  }
  return result;
}

std::optional<NonTerminalWitness> non_terminal_witness(const Graph& g, const VertexSet& orbit) {
  for (Vertex v : orbit.to_vector()) {
    if (connected_with_single_orbit_vertex(g, orbit, v)) continue;
    // Some allowed vertex is unreachable from v; report the first.
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::deque<Vertex> q{v};
    seen[v] = 1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(x))
        if ((w == v || !orbit.contains(w)) && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    for (int u = 0; u < n; ++u)
      if (!orbit.contains(u) && !seen[u]) return NonTerminalWitness{u, v};
  }
  return std::nullopt;
}

std::optional<int> smallest_terminal_orbit_index(const Graph& g, const OrbitPartition& orbits) {
  if (orbits.count() <= 1)
    throw std::invalid_argument("terminal orbits undefined for vertex-transitive graphs");
  for (int i = 0; i < orbits.count(); ++i)
    if (is_terminal(g, orbits.orbits[i])) return i;
  return std::nullopt;
}

bool has_connected_proper_orbit_subset(const Graph& g, const OrbitPartition& orbits) {
  const int k = orbits.count();
  if (k > 20) throw std::invalid_argument("orbit subset enumeration guarded at 20 orbits");
  const int n = g.vertex_count();
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    VertexSet s(n);
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s |= orbits.orbits[i];
    if (connected_components(g, s).size() == 1) return true;
  }
  return false;
}

StructuralPredicates structural_predicates(const Graph& g, const OrbitPartition& orbits) {
  StructuralPredicates p;
  p.has_universal = !universal_vertices(g).empty();
  p.has_cut_vertex = !cut_vertices(g).empty();
  for (const auto& orbit : orbits.orbits) {
    if (orbit.size() < 2) continue;
    auto members = orbit.to_vector();
    auto all_twins = [&](bool closed) {
      Vertex a = members[0];
      for (std::size_t i = 1; i < members.size(); ++i) {
        Vertex b = members[i];
        VertexSet na(g.vertex_count()), nb(g.vertex_count());
        for (Vertex w : g.neighbors(a)) na.insert(w);
        for (Vertex w : g.neighbors(b)) nb.insert(w);
        if (closed) {
          na.insert(a);
          nb.insert(b);
        }
        if (!(na == nb)) return false;
      }
      return true;
    };
    if (all_twins(false) || all_twins(true)) {
      p.has_twin_orbit = true;
      break;
    }
  }
  if (orbits.count() > 1)
    p.has_connected_proper_orbit_subset = has_connected_proper_orbit_subset(g, orbits);
  return p;
}

TerminalReport analyze_graph(const Graph& g) {
  require_connected(g);
  auto canon = canonize(g);
  TerminalReport rep;
  rep.vertex_transitive = canon.orbits.count() == 1;
  for (int i = 0; i < canon.orbits.count(); ++i) {
    OrbitReport orep;
    orep.vertices = canon.orbits.orbits[i].to_vector();
    orep.min_canonical_label = g.vertex_count();
    for (Vertex v : orep.vertices)
      orep.min_canonical_label = std::min(orep.min_canonical_label, canon.form.labeling[v]);
    if (!rep.vertex_transitive) {
      orep.terminal = is_terminal(g, canon.orbits.orbits[i]);
      if (!orep.terminal) orep.witness = non_terminal_witness(g, canon.orbits.orbits[i]);
      if (orep.terminal && !rep.smallest_terminal) rep.smallest_terminal = i;
    }
    rep.orbits.push_back(std::move(orep));
  }
  if (!rep.vertex_transitive) {
    rep.predicates = structural_predicates(g, canon.orbits);
    rep.predicates_imply_terminal = !rep.predicates.any() || rep.smallest_terminal.has_value();
  }
  return rep;
}

TargetOrbits select_target_orbits(const Graph& g, const OrbitPartition& orbits) {
  if (orbits.count() <= 1)
    throw std::invalid_argument("target orbits undefined for vertex-transitive graphs");
  TargetOrbits t;
  t.o1 = orbits.orbits[0];
  t.o1_index = 0;
  for (int i = 1; i < orbits.count(); ++i) {
    bool adjacent = false;
    for (Vertex v : orbits.orbits[i].to_vector()) {
      for (Vertex w : g.neighbors(v))
        if (t.o1.contains(w)) {
          adjacent = true;
          break;
        }
      if (adjacent) break;
    }
    if (adjacent) {
      t.o2 = orbits.orbits[i];
      t.o2_index = i;
      return t;
    }
  }
  throw std::logic_error("no orbit adjacent to the first orbit in a connected graph");
}

ConfinementSubgraph confinement_subgraph(const Graph& g, const VertexSet& o1, const VertexSet& o2,
                                         const VertexSet& cc) {
  if (!cc.subset_of(o2)) throw std::invalid_argument("component must lie inside the second orbit");
  ConfinementSubgraph out;
  out.vertices = cc;
  for (Vertex v : o1.to_vector())
    for (Vertex w : g.neighbors(v))
      if (cc.contains(w)) {
        out.vertices.insert(v);
        break;
      }
  auto plain = induced_subgraph(g, out.vertices);
  std::vector<int> colors(plain.graph.vertex_count(), 0);
  for (int i = 0; i < plain.graph.vertex_count(); ++i)
    colors[i] = cc.contains(plain.to_parent[i]) ? 1 : 0;
  out.sub = plain;
  out.sub.graph = plain.graph.with_colors(std::move(colors));
  out.canon = canonize(out.sub.graph);

  auto terminal = smallest_terminal_orbit_index(out.sub.graph, out.canon.orbits);
  bool o1_colored_terminal = false;
  for (int i = 0; i < out.canon.orbits.count(); ++i) {
    bool all_o1 = true;
    for (Vertex v : out.canon.orbits.orbits[i].to_vector())
      if (out.sub.graph.color(v) != 0) all_o1 = false;
    if (all_o1 && is_terminal(out.sub.graph, out.canon.orbits.orbits[i])) {
      o1_colored_terminal = true;
      break;
    }
  }
  if (!terminal || !o1_colored_terminal)
    throw std::logic_error("confinement subgraph lacks a terminal orbit on the first-orbit side");
  out.terminal_orbit_index = *terminal;
  return out;
}

}  // namespace gathersim
