#ifndef GATHERSIM_FAMILIES_HPP
#define GATHERSIM_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gathersim/graph.hpp"

namespace gathersim {

// Elementary families.
Graph path_graph(int n);
Graph cycle_graph(int n);       // n >= 3
Graph complete_graph(int n);    // n >= 1
Graph star_graph(int leaves);   // K_{1,leaves}, center is vertex 0
Graph complete_bipartite(int m, int n);

// t disjoint copies of g (disconnected for t >= 2; analysis constructor).
Graph disjoint_copies(int t, const Graph& g);

// Disjoint union of g1 and g2 plus every edge between them.
Graph join(const Graph& g1, const Graph& g2);

// Layered bit-flip network on (d+1)*2^d vertices: vertex [l,c] has id
// l*2^d + c; [l,c] ~ [l+1,c] and [l,c] ~ [l+1, c xor (1<<l)].
Graph butterfly(int d);
int butterfly_layer(int d, Vertex v);

// Cyclic arrangement of n copies of A and B with complete joins A_i + B_i and
// B_i + A_{i+1}. A and B must be vertex-transitive and non-isomorphic, n >= 3.
Graph join_ring(const Graph& a, const Graph& b, int n);

// n copies of K_m sharing one universal vertex (vertex 0). m >= 2, n >= 2.
Graph windmill(int m, int n);

// Built from K_1 by the given op sequence: 'i' adds an isolated vertex,
// 'd' adds a dominating (universal) vertex.
Graph threshold_graph(const std::string& ops);

// Seed-deterministic random constructors (explicit mt19937_64 streams).
Graph random_tree(int n, std::uint64_t seed);
Graph random_connected(int n, double p, std::uint64_t seed);
// Thin compositions sufficient for class-membership testing, not uniform
// samplers: a random tree skeleton with cycle / clique substitutions.
Graph random_cactus(int blocks, std::uint64_t seed);
Graph random_block_graph(int blocks, std::uint64_t seed);
Graph random_trivially_perfect(int n, std::uint64_t seed);

// Small named graphs for family parameters: "K3", "C4", "P5", "2K1" (an
// optional copy-count prefix makes disjoint copies).
Graph parse_small_graph_spec(const std::string& spec);

// CLI-facing dispatcher; params are the positional tokens after the family
// name. Throws std::invalid_argument on unknown families or bad parameters.
Graph generate_family(const std::string& family, const std::vector<std::string>& params,
                      std::uint64_t seed);
std::vector<std::string> family_names();

}  // namespace gathersim

#endif  // GATHERSIM_FAMILIES_HPP
