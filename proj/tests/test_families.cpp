#include <doctest.h>

#include <map>

#include "gathersim/canon.hpp"
#include "gathersim/families.hpp"
#include "gathersim/orbit_analysis.hpp"

using namespace gathersim;

TEST_CASE("butterfly counts and degree profile") {
  Graph bf1 = butterfly(1);
  CHECK(bf1.vertex_count() == 4);
  CHECK(canonical_form(bf1) == canonical_form(cycle_graph(4)));

  Graph bf2 = butterfly(2);
  CHECK(bf2.vertex_count() == 12);
  CHECK(bf2.edge_count() == 16);

  Graph bf3 = butterfly(3);
  CHECK(bf3.vertex_count() == 32);

  for (int d = 1; d <= 4; ++d) {
    Graph bf = butterfly(d);
    CHECK(bf.is_connected());
    for (int v = 0; v < bf.vertex_count(); ++v) {
      int layer = butterfly_layer(d, v);
      CHECK(bf.degree(v) == ((layer == 0 || layer == d) ? 2 : 4));
    }
  }
  CHECK_THROWS_AS(butterfly(0), std::invalid_argument);
}

TEST_CASE("butterfly orbits pair complementary layers") {
  for (int d = 2; d <= 3; ++d) {
    Graph bf = butterfly(d);
    auto orbits = automorphism_orbits(bf);
    CHECK(orbits.count() == d / 2 + 1);
    for (const auto& orbit : orbits.orbits) {
      std::map<int, int> layers;
      for (Vertex v : orbit.to_vector()) layers[butterfly_layer(d, v)]++;
      // Each orbit holds exactly the two complementary layers (one layer when
      // d is even and the layer is the middle one).
      for (auto [l, cnt] : layers) {
        CHECK(layers.count(d - l));
        CHECK(cnt == 1 << d);
      }
      int lo = layers.begin()->first;
      CHECK(layers.size() == (lo == d - lo ? 1u : 2u));
    }
  }
}

TEST_CASE("join ring matches the 9-vertex two-orbit fixture") {
  Graph h = join_ring(parse_small_graph_spec("2K1"), parse_small_graph_spec("K1"), 3);
  CHECK(h.vertex_count() == 9);
  CHECK(h.edge_count() == 12);
  CHECK(h.is_connected());
  auto orbits = automorphism_orbits(h);
  CHECK(orbits.count() == 2);

  // Hand-built copy of the same construction: three 1-vertex hubs, each
  // joined to the two-vertex groups on both sides of a 3-ring.
  std::vector<std::pair<int, int>> es;
  auto a = [](int copy, int which) { return copy * 2 + which; };
  for (int i = 0; i < 3; ++i) {
    int b = 6 + i;
    for (int w = 0; w < 2; ++w) {
      es.emplace_back(b, a(i, w));
      es.emplace_back(b, a((i + 1) % 3, w));
    }
  }
  Graph manual = Graph::from_edges(9, es);
  CHECK(canonical_form(h) == canonical_form(manual));
}

TEST_CASE("join ring validation and the two-orbit invariant") {
  Graph k2 = parse_small_graph_spec("K2");
  Graph k1 = parse_small_graph_spec("K1");
  CHECK_THROWS_AS(join_ring(k1, k1, 3), std::invalid_argument);          // isomorphic
  CHECK_THROWS_AS(join_ring(path_graph(3), k1, 3), std::invalid_argument);  // not transitive
  CHECK_THROWS_AS(join_ring(k2, k1, 2), std::invalid_argument);          // n too small

  Graph h = join_ring(k2, k1, 4);
  CHECK(h.vertex_count() == 12);
  CHECK(automorphism_orbits(h).count() == 2);

  for (int n = 3; n <= 5; ++n) {
    for (const char* spec : {"2K1", "C4"}) {
      Graph g = join_ring(parse_small_graph_spec(spec), k1, n);
      CHECK(g.is_connected());
      CHECK(automorphism_orbits(g).count() == 2);
    }
  }
}

TEST_CASE("windmill") {
  Graph wd = windmill(3, 2);
  CHECK(wd.vertex_count() == 5);
  CHECK(wd.degree(0) == 4);
  CHECK(universal_vertices(wd).contains(0));
  CHECK(canonical_form(windmill(2, 3)) == canonical_form(star_graph(3)));
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 3; ++n) {
      Graph g = windmill(m, n);
      CHECK(g.vertex_count() == n * (m - 1) + 1);
      CHECK(g.is_connected());
      CHECK(universal_vertices(g).contains(0));
    }
  CHECK_THROWS_AS(windmill(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(windmill(3, 1), std::invalid_argument);
}

TEST_CASE("threshold graphs") {
  Graph t = threshold_graph("did");
  CHECK(t.vertex_count() == 4);
  CHECK_FALSE(universal_vertices(t).empty());  // last op dominating
  CHECK(t.is_connected());
  CHECK_THROWS_AS(threshold_graph("dx"), std::invalid_argument);
  // Ending with an isolated vertex leaves the graph disconnected; the
  // constructor allows it for analysis.
  CHECK_FALSE(threshold_graph("di").is_connected());
}

TEST_CASE("joins") {
  // The added independent vertices of G' + 2K_1 are false twins. For most G'
  // they are an orbit on their own; the orbit containing them is terminal
  // either way.
  Graph j4 = join(path_graph(4), disjoint_copies(2, complete_graph(1)));
  auto orbits4 = automorphism_orbits(j4);
  bool exact = false;
  for (const auto& orbit : orbits4.orbits)
    if (orbit == VertexSet::of(6, {4, 5})) {
      exact = true;
      CHECK(is_terminal(j4, orbit));
    }
  CHECK(exact);

  // G' = P_3 is the degenerate case: the join is the 4-spoke wheel, and the
  // added vertices merge into the rim orbit, which is still terminal.
  Graph j3 = join(path_graph(3), disjoint_copies(2, complete_graph(1)));
  auto orbits3 = automorphism_orbits(j3);
  const VertexSet& rim = orbits3.orbits[orbits3.orbit_of[3]];
  CHECK(rim.contains(4));
  CHECK(rim.size() == 4);
  CHECK(is_terminal(j3, rim));

  CHECK(canonical_form(complete_bipartite(3, 2)) ==
        canonical_form(join(disjoint_copies(3, complete_graph(1)),
                            disjoint_copies(2, complete_graph(1)))));
}

TEST_CASE("seed-deterministic random families") {
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    CHECK(graph_to_text(random_tree(9, seed)) == graph_to_text(random_tree(9, seed)));
    CHECK(graph_to_text(random_connected(9, 0.3, seed)) ==
          graph_to_text(random_connected(9, 0.3, seed)));
    Graph cactus = random_cactus(5, seed);
    CHECK(cactus.is_connected());
    Graph block = random_block_graph(5, seed);
    CHECK(block.is_connected());
    Graph tp = random_trivially_perfect(10, seed);
    CHECK(tp.is_connected());
    CHECK_FALSE(universal_vertices(tp).empty());
  }
  CHECK(graph_to_text(random_tree(9, 1)) != graph_to_text(random_tree(9, 2)));
}

TEST_CASE("small graph specs") {
  CHECK(parse_small_graph_spec("K1").vertex_count() == 1);
  CHECK(parse_small_graph_spec("2K1").vertex_count() == 2);
  CHECK(parse_small_graph_spec("2K1").edge_count() == 0);
  CHECK(parse_small_graph_spec("C4").edge_count() == 4);
  CHECK(parse_small_graph_spec("P3").edge_count() == 2);
  CHECK_THROWS_AS(parse_small_graph_spec("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_small_graph_spec("K"), std::invalid_argument);
}

TEST_CASE("family dispatcher") {
  Graph g = generate_family("butterfly", {"2"}, 0);
  CHECK(g.vertex_count() == 12);
  CHECK(generate_family("join-ring", {"2K1", "K1", "3"}, 0).vertex_count() == 9);
  CHECK(generate_family("complete-bipartite", {"3", "2"}, 0).vertex_count() == 5);
  CHECK_THROWS_AS(generate_family("nope", {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("butterfly", {}, 0), std::invalid_argument);
}
