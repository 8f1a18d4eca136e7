#include <doctest.h>

#include <random>

#include "gathersim/families.hpp"
#include "gathersim/orbit_analysis.hpp"
#include "oracles.hpp"

using namespace gathersim;

namespace {

Graph fig2_ring() {
  return join_ring(parse_small_graph_spec("2K1"), parse_small_graph_spec("K1"), 3);
}

// Definition-level terminal check: every u outside the orbit reaches every v
// inside by a path whose interior avoids the orbit.
bool terminal_by_paths(const Graph& g, const VertexSet& orbit) {
  for (Vertex v : orbit.to_vector()) {
    VertexSet forb = orbit;
    forb.erase(v);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (orbit.contains(u)) continue;
      if (oracles::avoid_distance_oracle(g, u, v, forb) < 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("terminal orbits of the named fixtures") {
  Graph k32 = complete_bipartite(3, 2);
  auto orbits = automorphism_orbits(k32);
  REQUIRE(orbits.count() == 2);
  CHECK(is_terminal(k32, orbits.orbits[0]));
  CHECK(is_terminal(k32, orbits.orbits[1]));

  Graph h = fig2_ring();
  auto horb = automorphism_orbits(h);
  REQUIRE(horb.count() == 2);
  CHECK_FALSE(is_terminal(h, horb.orbits[0]));
  CHECK_FALSE(is_terminal(h, horb.orbits[1]));

  Graph bf2 = butterfly(2);
  auto borb = automorphism_orbits(bf2);
  for (const auto& orbit : borb.orbits) CHECK_FALSE(is_terminal(bf2, orbit));

  Graph star = star_graph(4);
  auto sorb = automorphism_orbits(star);
  for (const auto& orbit : sorb.orbits) {
    if (orbit.size() == 1) CHECK(is_terminal(star, orbit));  // the center
  }
}

TEST_CASE("connectivity form agrees with the avoiding-path form") {
  std::mt19937_64 rng(606);
  std::vector<Graph> corpus = {complete_bipartite(3, 2), fig2_ring(), butterfly(2),
                               star_graph(4), windmill(3, 2)};
  for (int iter = 0; iter < 25; ++iter) {
    int n = 4 + static_cast<int>(rng() % 6);
    corpus.push_back(oracles::random_connected_graph(n, rng));
  }
  for (const Graph& g : corpus) {
    auto orbits = automorphism_orbits(g);
    if (orbits.count() < 2) continue;
    for (const auto& orbit : orbits.orbits)
      CHECK(is_terminal(g, orbit) == terminal_by_paths(g, orbit));
  }
}

TEST_CASE("smallest terminal orbit") {
  Graph k32 = complete_bipartite(3, 2);
  auto canon = canonize(k32);
  auto idx = smallest_terminal_orbit_index(k32, canon.orbits);
  REQUIRE(idx.has_value());
  CHECK(*idx == 0);  // both terminal, the order decides

  Graph bf2 = butterfly(2);
  auto bcanon = canonize(bf2);
  CHECK_FALSE(smallest_terminal_orbit_index(bf2, bcanon.orbits).has_value());

  Graph wd = windmill(3, 2);
  auto wcanon = canonize(wd);
  CHECK(smallest_terminal_orbit_index(wd, wcanon.orbits).has_value());

  Graph c6 = cycle_graph(6);
  auto ccanon = canonize(c6);
  CHECK_THROWS_AS(smallest_terminal_orbit_index(c6, ccanon.orbits), std::invalid_argument);
}

TEST_CASE("connected proper orbit subsets") {
  Graph star = star_graph(4);
  CHECK(has_connected_proper_orbit_subset(star, automorphism_orbits(star)));
  Graph k32 = complete_bipartite(3, 2);
  CHECK_FALSE(has_connected_proper_orbit_subset(k32, automorphism_orbits(k32)));
  Graph h = fig2_ring();
  CHECK_FALSE(has_connected_proper_orbit_subset(h, automorphism_orbits(h)));
}

TEST_CASE("structural predicate flags") {
  Graph t = threshold_graph("didid");
  auto tp = structural_predicates(t, automorphism_orbits(t));
  CHECK(tp.has_universal);

  Graph wd = windmill(3, 2);
  auto wp = structural_predicates(wd, automorphism_orbits(wd));
  CHECK(wp.has_universal);
  CHECK(wp.has_cut_vertex);

  Graph j = join(path_graph(4), disjoint_copies(2, complete_graph(1)));
  auto jp = structural_predicates(j, automorphism_orbits(j));
  CHECK(jp.has_twin_orbit);

  Graph jk = join(path_graph(4), complete_graph(3));
  auto jkp = structural_predicates(jk, automorphism_orbits(jk));
  CHECK(jkp.has_twin_orbit);  // the K_3 side: pairwise true twins
}

TEST_CASE("predicates imply a terminal orbit on generated instances") {
  std::mt19937_64 rng(707);
  std::vector<Graph> corpus;
  for (std::uint64_t s = 1; s <= 8; ++s) {
    corpus.push_back(random_cactus(4 + s % 3, s));
    corpus.push_back(random_block_graph(4 + s % 3, s));
    corpus.push_back(random_trivially_perfect(8 + static_cast<int>(s), s));
    corpus.push_back(threshold_graph(s % 2 ? "ddiid" : "ididd"));
    corpus.push_back(join(random_connected(5, 0.4, s), disjoint_copies(2, complete_graph(1))));
    corpus.push_back(join(random_connected(5, 0.4, s), complete_graph(3)));
  }
  for (const Graph& g : corpus) {
    auto orbits = automorphism_orbits(g);
    if (orbits.count() < 2) continue;
    auto preds = structural_predicates(g, orbits);
    if (preds.any()) {
      bool terminal_exists = smallest_terminal_orbit_index(g, orbits).has_value();
      CHECK(terminal_exists);
    }
  }
}

TEST_CASE("no-terminal graphs have only disconnected orbit subsets") {
  // Contrapositive of the connected-subset theorem, on the two families
  // built to lack terminal orbits.
  std::vector<Graph> corpus = {fig2_ring(), butterfly(2),
                               join_ring(parse_small_graph_spec("K2"),
                                         parse_small_graph_spec("K1"), 3)};
  for (const Graph& g : corpus) {
    auto orbits = automorphism_orbits(g);
    REQUIRE(!smallest_terminal_orbit_index(g, orbits).has_value());
    CHECK_FALSE(has_connected_proper_orbit_subset(g, orbits));
    for (const auto& orbit : orbits.orbits)
      CHECK(connected_components(g, orbit).size() > 1);
  }
}

TEST_CASE("target orbit selection") {
  Graph h = fig2_ring();
  auto canon = canonize(h);
  auto t = select_target_orbits(h, canon.orbits);
  CHECK(t.o1_index == 0);
  CHECK(t.o2_index == 1);  // only two orbits, adjacent
  CHECK((t.o1 | t.o2).size() == h.vertex_count());

  Graph bf2 = butterfly(2);
  auto bcanon = canonize(bf2);
  auto bt = select_target_orbits(bf2, bcanon.orbits);
  CHECK(bt.o1_index == 0);
  bool adjacent = false;
  for (Vertex v : bt.o1.to_vector())
    for (Vertex w : bf2.neighbors(v))
      if (bt.o2.contains(w)) adjacent = true;
  CHECK(adjacent);

  Graph c4 = cycle_graph(4);
  auto ccanon = canonize(c4);
  CHECK_THROWS_AS(select_target_orbits(c4, ccanon.orbits), std::invalid_argument);
}

TEST_CASE("confinement subgraph carries a terminal orbit on the first-orbit side") {
  for (Graph g : {fig2_ring(), butterfly(2),
                  join_ring(parse_small_graph_spec("K2"), parse_small_graph_spec("K1"), 3)}) {
    auto canon = canonize(g);
    auto t = select_target_orbits(g, canon.orbits);
    auto comps = connected_components(g, t.o2);
    REQUIRE(!comps.empty());
    auto conf = confinement_subgraph(g, t.o1, t.o2, comps[0]);
    CHECK(conf.sub.graph.is_connected());
    CHECK(conf.sub.graph.colored());
    CHECK(conf.terminal_orbit_index >= 0);
    // Origin coloring: component vertices 1, first-orbit vertices 0.
    for (int i = 0; i < conf.sub.graph.vertex_count(); ++i) {
      Vertex host = conf.sub.to_parent[i];
      CHECK(conf.sub.graph.color(i) == (comps[0].contains(host) ? 1 : 0));
    }
  }
}

TEST_CASE("degenerate single-vertex component still yields a terminal orbit") {
  Graph h = fig2_ring();
  auto canon = canonize(h);
  auto t = select_target_orbits(h, canon.orbits);
  auto comps = connected_components(h, t.o2);
  for (const auto& cc : comps) {
    if (cc.size() != 1) continue;
    auto conf = confinement_subgraph(h, t.o1, t.o2, cc);
    CHECK(conf.terminal_orbit_index >= 0);
  }
}

TEST_CASE("analysis report for the three reference graphs") {
  auto k32 = analyze_graph(complete_bipartite(3, 2));
  CHECK_FALSE(k32.vertex_transitive);
  REQUIRE(k32.orbits.size() == 2);
  CHECK(k32.orbits[0].terminal);
  CHECK(k32.orbits[1].terminal);
  CHECK(k32.predicates_imply_terminal);

  auto h = analyze_graph(fig2_ring());
  REQUIRE(h.orbits.size() == 2);
  CHECK_FALSE(h.orbits[0].terminal);
  CHECK_FALSE(h.orbits[1].terminal);
  CHECK(h.orbits[0].witness.has_value());
  CHECK_FALSE(h.smallest_terminal.has_value());

  auto c6 = analyze_graph(cycle_graph(6));
  CHECK(c6.vertex_transitive);
  CHECK(c6.orbits.size() == 1);

  auto star = analyze_graph(star_graph(4));
  bool pendant_terminal = false;
  for (const auto& o : star.orbits)
    if (o.vertices.size() == 4 && o.terminal) pendant_terminal = true;
  CHECK(pendant_terminal);
}
