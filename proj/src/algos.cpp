#include "gathersim/algos.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <memory>
#include <set>

namespace gathersim {

std::string_view task_name(Task t) {
  switch (t) {
    case Task::at_t1: return "AT.T1";
    case Task::at_t2: return "AT.T2";
    case Task::at_t3: return "AT.T3";
    case Task::t1: return "T1";
    case Task::t2_i: return "T2.i";
    case Task::t2_ii: return "T2.ii";
    case Task::t2_iii: return "T2.iii";
    case Task::t2_iv: return "T2.iv";
    case Task::t3_i: return "T3.i";
    case Task::t3_ii: return "T3.ii";
    case Task::t3_iii: return "T3.iii";
    case Task::t4: return "T4";
    case Task::final_task: return "FINAL";
  }
  return "?";
}

std::optional<Task> task_from_name(std::string_view name) {
  static const std::map<std::string_view, Task> table = {
      {"AT.T1", Task::at_t1},   {"AT.T2", Task::at_t2},  {"AT.T3", Task::at_t3},
      {"T1", Task::t1},         {"T2.i", Task::t2_i},    {"T2.ii", Task::t2_ii},
      {"T2.iii", Task::t2_iii}, {"T2.iv", Task::t2_iv},  {"T3.i", Task::t3_i},
      {"T3.ii", Task::t3_ii},   {"T3.iii", Task::t3_iii},{"T4", Task::t4},
      {"FINAL", Task::final_task}};
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Task classify_terminal_task(const Configuration& c, const VertexSet& target_orbit) {
  if (c.final_config()) return Task::final_task;
  int inside = (c.occupied & target_orbit).size();
  if (inside >= 2) return Task::at_t1;
  if (inside == 1) return Task::at_t2;
  return Task::at_t3;
}

namespace {

int min_label(const VertexSet& s, const std::vector<int>& labeling) {
  int best = INT_MAX;
  for (Vertex v : s.to_vector()) best = std::min(best, labeling[v]);
  return best;
}

// Components of G[orbit] in canonical order (min canonical label first).
std::vector<VertexSet> ordered_components(const Graph& g, const VertexSet& orbit,
                                          const std::vector<int>& labeling) {
  auto comps = connected_components(g, orbit);
  std::sort(comps.begin(), comps.end(), [&](const VertexSet& a, const VertexSet& b) {
    return min_label(a, labeling) < min_label(b, labeling);
  });
  return comps;
}

// First hop of the canonical-min shortest path to the nearest target vertex
// (nearest first, canonical label breaking ties among targets and hops).
Vertex first_hop_toward(const Graph& g, Vertex from, const VertexSet& targets,
                        const std::vector<int>& labeling) {
  if (targets.contains(from)) return from;
  auto dist = distances_from(g, from);
  Vertex goal = -1;
  for (Vertex t : targets.to_vector()) {
    if (dist[t] < 0) continue;
    if (goal < 0 || dist[t] < dist[goal] ||
        (dist[t] == dist[goal] && labeling[t] < labeling[goal]))
      goal = t;
  }
  if (goal < 0) throw std::logic_error("move target unreachable in a connected graph");
  auto path = shortest_path_avoiding(g, from, goal, VertexSet(g.vertex_count()), labeling);
  return path->vertices[1];
}

struct SideStructure {
  Vertex head = -1;
  std::optional<Vertex> rear;
};

// U_j of pre_3: the occupied vertex of the component strictly closer to the
// opposite component than every occupied O1 vertex, plus (optionally) an
// occupied rear adjacent to it with the head on a rear-to-opposite shortest
// path. At most two occupied vertices may sit inside the component.
std::optional<SideStructure> side_structure(const Graph& g, const VertexSet& occupied,
                                            const VertexSet& comp, const VertexSet& opposite,
                                            const VertexSet& f) {
  auto dist_opp = distances_to_set(g, opposite);
  int min_f = INT_MAX;
  for (Vertex v : f.to_vector()) min_f = std::min(min_f, dist_opp[v]);
  auto occ_in = (occupied & comp).to_vector();
  if (occ_in.empty() || occ_in.size() > 2) return std::nullopt;
  SideStructure s;
  if (occ_in.size() == 1) {
    s.head = occ_in[0];
  } else {
    Vertex a = occ_in[0], b = occ_in[1];
    if (dist_opp[a] == dist_opp[b]) return std::nullopt;
    s.head = dist_opp[a] < dist_opp[b] ? a : b;
    Vertex rear = s.head == a ? b : a;
    if (!g.adjacent(rear, s.head) || dist_opp[s.head] != dist_opp[rear] - 1) return std::nullopt;
    s.rear = rear;
  }
  if (dist_opp[s.head] >= min_f) return std::nullopt;
  return s;
}

}  // namespace

NonTerminalContext classify_nonterminal(const Graph& g, const VertexSet& occupied,
                                        const CanonResult& canon, const TargetOrbits& targets) {
  const int n = g.vertex_count();
  const auto& labeling = canon.form.labeling;
  NonTerminalContext ctx;
  ctx.o1 = targets.o1;
  ctx.o2 = targets.o2;
  ctx.f = occupied & targets.o1;

  if (occupied.size() == 1) {
    ctx.task = Task::final_task;
    return ctx;
  }

  auto comps = ordered_components(g, targets.o2, labeling);
  std::vector<VertexSet> occupied_comps;
  for (const auto& comp : comps)
    if (comp.intersects(occupied)) occupied_comps.push_back(comp);

  // pre_4: all robots inside CC plus the O1 vertices adjacent to it, for some
  // component CC. With occupied O2 vertices present only their component can
  // match; otherwise the canonically first covering component is taken.
  if (occupied_comps.size() <= 1) {
    const auto& candidates = occupied_comps.size() == 1 ? occupied_comps : comps;
    for (const auto& cand : candidates) {
      VertexSet gp = cand;
      for (Vertex v : targets.o1.to_vector()) {
        for (Vertex w : g.neighbors(v))
          if (cand.contains(w)) {
            gp.insert(v);
            break;
          }
      }
      if (occupied.subset_of(gp)) {
        ctx.task = Task::t4;
        ctx.cc = cand;
        ctx.u = occupied & cand;
        ctx.gprime = gp;
        return ctx;
      }
    }
  }

  // pre_3: exactly two occupied components, each reduced to a head vertex
  // with an optional trailing rear; leftovers outside O1 must attach as rears.
  if (occupied_comps.size() == 2) {
    const VertexSet& c1 = occupied_comps[0];
    const VertexSet& c2 = occupied_comps[1];
    auto s1 = side_structure(g, occupied, c1, c2, ctx.f);
    auto s2 = side_structure(g, occupied, c2, c1, ctx.f);
    if (s1 && s2) {
      auto dist_c1 = distances_to_set(g, c1);
      auto dist_c2 = distances_to_set(g, c2);
      VertexSet leftovers = occupied - targets.o1 - c1 - c2;
      bool ok = true;
      for (Vertex x : leftovers.to_vector()) {
        bool fits1 = !s1->rear && g.adjacent(x, s1->head) && dist_c2[s1->head] == dist_c2[x] - 1;
        bool fits2 = !s2->rear && g.adjacent(x, s2->head) && dist_c1[s2->head] == dist_c1[x] - 1;
        if (fits1 && fits2) {
          // Deterministic: attach to the side with the canonically smaller head.
          if (labeling[s1->head] < labeling[s2->head])
            s1->rear = x;
          else
            s2->rear = x;
        } else if (fits1) {
          s1->rear = x;
        } else if (fits2) {
          s2->rear = x;
        } else {
          ok = false;
          break;
        }
      }
      if (ok) {
        int size1 = 1 + (s1->rear ? 1 : 0);
        int size2 = 1 + (s2->rear ? 1 : 0);
        ctx.cc1 = c1;
        ctx.cc2 = c2;
        ctx.head1 = s1->head;
        ctx.rear1 = s1->rear;
        ctx.head2 = s2->head;
        ctx.rear2 = s2->rear;
        if (size1 == 1 && size2 == 1)
          ctx.task = Task::t3_i;
        else if (size1 == 2 && size2 == 2)
          ctx.task = Task::t3_iii;
        else
          ctx.task = Task::t3_ii;
        return ctx;
      }
    }
  }

  // pre_2: robots in O1 and a single tracked component, plus at most a
  // front/rear pair in transit.
  if (occupied_comps.empty()) {
    if ((occupied - targets.o1).empty() && !ctx.f.empty()) {
      ctx.task = Task::t2_i;
      return ctx;
    }
  } else {
    for (const auto& cand : occupied_comps) {
      VertexSet x_set = occupied - targets.o1 - cand;
      auto dist_cc = distances_to_set(g, cand);
      int min_f = INT_MAX;
      for (Vertex v : ctx.f.to_vector()) min_f = std::min(min_f, dist_cc[v]);
      auto xs = x_set.to_vector();
      if (xs.empty()) {
        if (!ctx.f.empty()) {
          ctx.task = Task::t2_ii;
          ctx.cc = cand;
          ctx.u = occupied & cand;
          return ctx;
        }
        continue;
      }
      if (xs.size() == 1) {
        Vertex front = xs[0];
        if (dist_cc[front] < min_f) {
          ctx.task = Task::t2_iii;
          ctx.cc = cand;
          ctx.u = occupied & cand;
          ctx.front = front;
          return ctx;
        }
        continue;
      }
      if (xs.size() == 2) {
        Vertex a = xs[0], b = xs[1];
        if (dist_cc[a] == dist_cc[b]) continue;
        Vertex front = dist_cc[a] < dist_cc[b] ? a : b;
        Vertex rear = front == a ? b : a;
        if (g.adjacent(rear, front) && dist_cc[front] == dist_cc[rear] - 1 &&
            dist_cc[front] < min_f) {
          ctx.task = Task::t2_iv;
          ctx.cc = cand;
          ctx.u = occupied & cand;
          ctx.front = front;
          ctx.rear = rear;
          return ctx;
        }
        continue;
      }
    }
  }

  ctx.task = Task::t1;
  (void)n;
  return ctx;
}

Vertex terminal_move(const View& view) {
  const Graph& g = view.graph;
  if (view.occupied.size() <= 1) return view.self;
  auto canon = canonize(g);
  if (canon.orbits.count() == 1)
    throw std::invalid_argument("terminal algorithm requires a non-vertex-transitive graph");
  auto idx = smallest_terminal_orbit_index(g, canon.orbits);
  if (!idx) throw std::invalid_argument("terminal algorithm requires a terminal orbit");
  const VertexSet& orbit = canon.orbits.orbits[*idx];
  const auto& labeling = canon.form.labeling;
  VertexSet inside = view.occupied & orbit;

  if (inside.size() >= 2) {
    if (!orbit.contains(view.self)) return view.self;
    Vertex best = -1;
    for (Vertex w : g.neighbors(view.self))
      if (!orbit.contains(w) && (best < 0 || labeling[w] < labeling[best])) best = w;
    if (best < 0) throw std::logic_error("orbit vertex admits no edge out of its orbit");
    return best;
  }
  if (inside.size() == 1) {
    Vertex target = inside.min_vertex();
    if (view.self == target || orbit.contains(view.self)) return view.self;
    auto path = shortest_path_avoiding(g, view.self, target, orbit, labeling);
    if (!path) throw std::logic_error("no orbit-avoiding path to a terminal orbit vertex");
    return path->vertices[1];
  }
  return first_hop_toward(g, view.self, orbit, labeling);
}

Vertex nonterminal_move(const View& view) {
  const Graph& g = view.graph;
  if (view.occupied.size() <= 1) return view.self;
  auto canon = canonize(g);
  if (canon.orbits.count() == 1)
    throw std::invalid_argument("nonterminal algorithm requires a non-vertex-transitive graph");
  auto targets = select_target_orbits(g, canon.orbits);
  auto ctx = classify_nonterminal(g, view.occupied, canon, targets);
  const auto& labeling = canon.form.labeling;
  const Vertex self = view.self;

  switch (ctx.task) {
    case Task::final_task:
      return self;
    case Task::t1:
      if (ctx.o1.contains(self)) return self;
      return first_hop_toward(g, self, ctx.o1, labeling);
    case Task::t2_i: {
      if (!ctx.o1.contains(self)) return self;
      return first_hop_toward(g, self, ctx.o2, labeling);
    }
    case Task::t2_ii: {
      auto dist_cc = distances_to_set(g, ctx.cc);
      Vertex designated = -1;
      for (Vertex v : ctx.f.to_vector())
        if (designated < 0 || dist_cc[v] < dist_cc[designated] ||
            (dist_cc[v] == dist_cc[designated] && labeling[v] < labeling[designated]))
          designated = v;
      if (self != designated) return self;
      return first_hop_toward(g, self, ctx.cc, labeling);
    }
    case Task::t2_iii:
      if (self != *ctx.front) return self;
      return first_hop_toward(g, self, ctx.cc, labeling);
    case Task::t2_iv:
      return self == *ctx.rear ? *ctx.front : self;
    case Task::t3_i:
      if (self == *ctx.head1) return first_hop_toward(g, self, ctx.cc2, labeling);
      if (self == *ctx.head2) return first_hop_toward(g, self, ctx.cc1, labeling);
      return self;
    case Task::t3_ii:
    case Task::t3_iii:
      if (ctx.rear1 && self == *ctx.rear1) return *ctx.head1;
      if (ctx.rear2 && self == *ctx.rear2) return *ctx.head2;
      return self;
    case Task::t4: {
      auto conf = confinement_subgraph(g, ctx.o1, ctx.o2, ctx.cc);
      View sub;
      sub.graph = conf.sub.graph;
      sub.occupied = VertexSet(sub.graph.vertex_count());
      for (Vertex v : view.occupied.to_vector()) {
        int mapped = conf.sub.from_parent[v];
        if (mapped < 0)
          throw std::logic_error("robot outside the confinement subgraph in task T4");
        sub.occupied.insert(mapped);
      }
      sub.self = conf.sub.from_parent[self];
      Vertex target_sub = terminal_move(sub);
      return conf.sub.to_parent[target_sub];
    }
    default:
      return self;
  }
}

namespace {

std::vector<Vertex> rears_of(const NonTerminalContext& ctx) {
  std::vector<Vertex> rears;
  if (ctx.task == Task::t2_iv && ctx.rear) rears.push_back(*ctx.rear);
  if ((ctx.task == Task::t3_ii || ctx.task == Task::t3_iii)) {
    if (ctx.rear1) rears.push_back(*ctx.rear1);
    if (ctx.rear2) rears.push_back(*ctx.rear2);
  }
  return rears;
}

}  // namespace

GatherAlgorithm make_terminal_algorithm(const Graph& g) {
  require_connected(g);
  auto canon = canonize(g);
  if (canon.orbits.count() == 1)
    throw std::invalid_argument("terminal algorithm requires a non-vertex-transitive graph");
  auto idx = smallest_terminal_orbit_index(g, canon.orbits);
  if (!idx) throw std::invalid_argument("graph has no terminal orbit");
  VertexSet orbit = canon.orbits.orbits[*idx];

  GatherAlgorithm algo;
  algo.name = "terminal";
  algo.move = [](const View& v) { return terminal_move(v); };
  algo.classify = [orbit](const Configuration& c) {
    RoundLabel label;
    label.task = std::string(task_name(classify_terminal_task(c, orbit)));
    return label;
  };
  return algo;
}

GatherAlgorithm make_nonterminal_algorithm(const Graph& g) {
  require_connected(g);
  auto canon = canonize(g);
  if (canon.orbits.count() == 1)
    throw std::invalid_argument("nonterminal algorithm requires a non-vertex-transitive graph");
  if (smallest_terminal_orbit_index(g, canon.orbits))
    throw std::invalid_argument("graph has a terminal orbit; use the terminal algorithm");
  auto targets = select_target_orbits(g, canon.orbits);

  GatherAlgorithm algo;
  algo.name = "nonterminal";
  algo.tracked_orbit = targets.o2;
  Graph graph = g;
  auto shared_canon = std::make_shared<CanonResult>(std::move(canon));
  algo.move = [](const View& v) { return nonterminal_move(v); };
  algo.classify = [graph, shared_canon, targets](const Configuration& c) {
    auto ctx = classify_nonterminal(graph, c.occupied, *shared_canon, targets);
    RoundLabel label;
    label.task = std::string(task_name(ctx.task));
    label.rear_vertices = rears_of(ctx);
    return label;
  };
  return algo;
}

std::string choose_algorithm_name(const Graph& g) {
  auto canon = canonize(g);
  if (canon.orbits.count() == 1)
    throw std::invalid_argument("gathering on vertex-transitive graphs is out of scope");
  return smallest_terminal_orbit_index(g, canon.orbits) ? "terminal" : "nonterminal";
}

GatherAlgorithm make_auto_algorithm(const Graph& g) {
  return choose_algorithm_name(g) == "terminal" ? make_terminal_algorithm(g)
                                                : make_nonterminal_algorithm(g);
}

int terminal_reach_bound(const Graph& g, const VertexSet& orbit) {
  const int n = g.vertex_count();
  int bound = 0;
  for (Vertex v : orbit.to_vector()) {
    // Travel distances to v with the rest of the orbit off-limits.
    std::vector<int> dist(n, -1);
    std::deque<Vertex> q{v};
    dist[v] = 0;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(x))
        if (!orbit.contains(w) && dist[w] < 0) {
          dist[w] = dist[x] + 1;
          q.push_back(w);
        }
    }
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      int d;
      if (orbit.contains(u)) {
        // Orbit robots step out first.
        d = INT_MAX;
        for (Vertex w : g.neighbors(u))
          if (!orbit.contains(w) && dist[w] >= 0) d = std::min(d, 1 + dist[w]);
      } else {
        d = dist[u] >= 0 ? dist[u] : INT_MAX;
      }
      if (d == INT_MAX)
        throw std::logic_error("reach bound undefined: orbit is not terminal");
      bound = std::max(bound, d);
    }
  }
  return bound;
}

namespace {

const std::map<std::string, std::set<std::string>>& transition_edges() {
  static const std::map<std::string, std::set<std::string>> edges = {
      {"T1", {"T2.i", "T2.ii", "T2.iii", "T2.iv", "T3.i", "T3.ii", "T3.iii", "T4"}},
      {"T2.i", {"T2.ii"}},
      {"T2.ii", {"T2.iii", "T2.iv", "T3.i", "T3.ii", "T3.iii"}},
      {"T2.iii", {"T2.ii", "T2.iv", "T3.i", "T3.ii", "T3.iii", "T4"}},
      {"T2.iv", {"T2.iii", "T3.i", "T3.ii", "T4"}},
      {"T3.i", {"T2.iii", "T2.iv", "T3.ii", "T4"}},
      {"T3.ii", {"T3.i"}},
      {"T3.iii", {"T3.ii"}},
      {"T4", {"FINAL"}},
      // Terminal-algorithm labels: the engine's own conformance graph.
      {"AT.T1", {"AT.T2"}},
      {"AT.T2", {"FINAL"}},
      {"AT.T3", {"AT.T2"}},
      {"FINAL", {}},
  };
  return edges;
}

}  // namespace

ConformanceReport check_transitions(const std::vector<std::string>& round_tasks) {
  ConformanceReport report;
  const auto& edges = transition_edges();
  for (std::size_t i = 0; i < round_tasks.size(); ++i) {
    if (!edges.count(round_tasks[i])) {
      report.violations.push_back(
          {static_cast<int>(i), round_tasks[i], "", "unknown task label"});
      continue;
    }
    if (i == 0) continue;
    const std::string& from = round_tasks[i - 1];
    const std::string& to = round_tasks[i];
    if (from == to) continue;  // episodes span rounds; repeats are not transitions
    auto it = edges.find(from);
    if (it == edges.end() || !it->second.count(to))
      report.violations.push_back(
          {static_cast<int>(i), from, to, "transition not in the task graph"});
  }
  return report;
}

}  // namespace gathersim
