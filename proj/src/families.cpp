#include "gathersim/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>

#include "gathersim/canon.hpp"

namespace gathersim {

namespace {

std::vector<std::pair<int, int>> shifted(const Graph& g, int offset) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) es.emplace_back(u + offset, v + offset);
  return es;
}

int uniform_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite sides must be nonempty");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
  return Graph::from_edges(m + n, es);
}

Graph disjoint_copies(int t, const Graph& g) {
  if (t < 1) throw std::invalid_argument("copy count must be positive");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < t; ++i) {
    auto part = shifted(g, i * n);
    es.insert(es.end(), part.begin(), part.end());
  }
  return Graph::from_edges(t * n, es);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("join operands must be nonempty");
  auto es = g1.edges();
  auto e2 = shifted(g2, n1);
  es.insert(es.end(), e2.begin(), e2.end());
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) es.emplace_back(u, n1 + v);
  return Graph::from_edges(n1 + n2, es);
}

Graph butterfly(int d) {
  if (d < 1) throw std::invalid_argument("butterfly needs d >= 1");
  const int cols = 1 << d;
  const int n = (d + 1) * cols;
  auto id = [cols](int layer, int col) { return layer * cols + col; };
  std::vector<std::pair<int, int>> es;
  for (int layer = 0; layer < d; ++layer)
    for (int col = 0; col < cols; ++col) {
      es.emplace_back(id(layer, col), id(layer + 1, col));
      es.emplace_back(id(layer, col), id(layer + 1, col ^ (1 << layer)));
    }
  return Graph::from_edges(n, es);
}

int butterfly_layer(int d, Vertex v) {
  if (d < 1) throw std::invalid_argument("butterfly needs d >= 1");
  return v / (1 << d);
}

Graph join_ring(const Graph& a, const Graph& b, int n) {
  if (n < 3) throw std::invalid_argument("join ring needs n >= 3");
  if (!is_vertex_transitive(a) || !is_vertex_transitive(b))
    throw std::invalid_argument("join ring components must be vertex-transitive");
  if (canonical_form(a) == canonical_form(b))
    throw std::invalid_argument("join ring components must be non-isomorphic");
  const int na = a.vertex_count(), nb = b.vertex_count();
  // Copy A_i occupies [i*na, (i+1)*na), copy B_i follows all A copies.
  auto a_base = [na](int i) { return i * na; };
  auto b_base = [na, nb, n](int i) { return n * na + i * nb; };
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    auto ea = shifted(a, a_base(i));
    es.insert(es.end(), ea.begin(), ea.end());
    auto eb = shifted(b, b_base(i));
    es.insert(es.end(), eb.begin(), eb.end());
  }
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < nb; ++x) {
      for (int y = 0; y < na; ++y) es.emplace_back(b_base(i) + x, a_base(i) + y);
      for (int y = 0; y < na; ++y) es.emplace_back(b_base(i) + x, a_base((i + 1) % n) + y);
    }
  return Graph::from_edges(n * (na + nb), es);
}

Graph windmill(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("windmill needs m >= 2 and n >= 2");
  std::vector<std::pair<int, int>> es;
  int next = 1;
  for (int blade = 0; blade < n; ++blade) {
    std::vector<int> clique{0};
    for (int i = 0; i < m - 1; ++i) clique.push_back(next++);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) es.emplace_back(clique[i], clique[j]);
  }
  return Graph::from_edges(n * (m - 1) + 1, es);
}

Graph threshold_graph(const std::string& ops) {
  int n = 1;
  std::vector<std::pair<int, int>> es;
  for (char op : ops) {
    if (op == 'i') {
      ++n;
    } else if (op == 'd') {
      for (int v = 0; v < n; ++v) es.emplace_back(v, n);
      ++n;
    } else {
      throw std::invalid_argument("threshold ops must be 'i' or 'd'");
    }
  }
  return Graph::from_edges(n, es);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.emplace_back(uniform_below(rng, v), v);
  return Graph::from_edges(n, es);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of range");
  std::mt19937_64 rng(seed);
  // Random tree skeleton keeps it connected; extra edges arrive with rate p.
  std::vector<std::pair<int, int>> es;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int u = uniform_below(rng, v);
    es.emplace_back(u, v);
    present[u][v] = present[v][u] = 1;
  }
  const double scale = 1.0 / static_cast<double>(std::mt19937_64::max());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double roll = static_cast<double>(rng()) * scale;
      if (!present[u][v] && roll < p) {
        es.emplace_back(u, v);
        present[u][v] = present[v][u] = 1;
      }
    }
  return Graph::from_edges(n, es);
}

Graph random_cactus(int blocks, std::uint64_t seed) {
  if (blocks < 1) throw std::invalid_argument("cactus needs at least one block");
  std::mt19937_64 rng(seed);
  int n = 1;
  std::vector<std::pair<int, int>> es;
  for (int b = 0; b < blocks; ++b) {
    int attach = uniform_below(rng, n);
    if (rng() & 1) {  // bridge edge
      es.emplace_back(attach, n);
      n += 1;
    } else {  // chordless cycle of length 3..5 through the attachment vertex
      int len = 3 + uniform_below(rng, 3);
      int prev = attach;
      for (int i = 0; i < len - 1; ++i) {
        es.emplace_back(prev, n);
        prev = n++;
      }
      es.emplace_back(prev, attach);
    }
  }
  return Graph::from_edges(n, es);
}

Graph random_block_graph(int blocks, std::uint64_t seed) {
  if (blocks < 1) throw std::invalid_argument("block graph needs at least one block");
  std::mt19937_64 rng(seed);
  int n = 1;
  std::vector<std::pair<int, int>> es;
  for (int b = 0; b < blocks; ++b) {
    int attach = uniform_below(rng, n);
    int size = 2 + uniform_below(rng, 3);  // clique blocks K_2..K_4
    std::vector<int> clique{attach};
    for (int i = 0; i < size - 1; ++i) clique.push_back(n++);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) es.emplace_back(clique[i], clique[j]);
  }
  return Graph::from_edges(n, es);
}

Graph random_trivially_perfect(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  std::mt19937_64 rng(seed);
  // Recursive union / add-universal construction; the root op is always
  // add-universal so the result is connected.
  std::function<Graph(int, bool)> build = [&](int size, bool root) -> Graph {
    if (size == 1) return complete_graph(1);
    bool add_universal = root || (rng() & 1);
    if (add_universal) return join(build(size - 1, false), complete_graph(1));
    int left = 1 + uniform_below(rng, size - 1);
    Graph a = build(left, false);
    Graph b = build(size - left, false);
    auto es = a.edges();
    auto e2 = shifted(b, a.vertex_count());
    es.insert(es.end(), e2.begin(), e2.end());
    return Graph::from_edges(size, es);
  };
  return build(n, true);
}

Graph parse_small_graph_spec(const std::string& spec) {
  std::size_t i = 0;
  int copies = 0;
  while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
    copies = copies * 10 + (spec[i] - '0');
    ++i;
  }
  if (copies == 0) copies = 1;
  if (i >= spec.size()) throw std::invalid_argument("bad graph spec: " + spec);
  char kind = spec[i++];
  int size = 0;
  if (i >= spec.size()) throw std::invalid_argument("bad graph spec: " + spec);
  while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
    size = size * 10 + (spec[i] - '0');
    ++i;
  }
  if (i != spec.size() || size == 0) throw std::invalid_argument("bad graph spec: " + spec);
  Graph base;
  switch (kind) {
    case 'K': base = complete_graph(size); break;
    case 'C': base = cycle_graph(size); break;
    case 'P': base = path_graph(size); break;
    default: throw std::invalid_argument("bad graph spec: " + spec);
  }
  return copies == 1 ? base : disjoint_copies(copies, base);
}

namespace {

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("expected an integer for ") + what);
  }
}

void want(const std::vector<std::string>& params, std::size_t count, const char* usage) {
  if (params.size() != count)
    throw std::invalid_argument(std::string("usage: ") + usage);
}

}  // namespace

Graph generate_family(const std::string& family, const std::vector<std::string>& params,
                      std::uint64_t seed) {
  if (family == "path") {
    want(params, 1, "path <n>");
    return path_graph(to_int(params[0], "n"));
  }
  if (family == "cycle") {
    want(params, 1, "cycle <n>");
    return cycle_graph(to_int(params[0], "n"));
  }
  if (family == "complete") {
    want(params, 1, "complete <n>");
    return complete_graph(to_int(params[0], "n"));
  }
  if (family == "star") {
    want(params, 1, "star <leaves>");
    return star_graph(to_int(params[0], "leaves"));
  }
  if (family == "complete-bipartite") {
    want(params, 2, "complete-bipartite <m> <n>");
    return complete_bipartite(to_int(params[0], "m"), to_int(params[1], "n"));
  }
  if (family == "butterfly") {
    want(params, 1, "butterfly <d>");
    return butterfly(to_int(params[0], "d"));
  }
  if (family == "join-ring") {
    want(params, 3, "join-ring <A> <B> <n>  (e.g. join-ring 2K1 K1 3)");
    return join_ring(parse_small_graph_spec(params[0]), parse_small_graph_spec(params[1]),
                     to_int(params[2], "n"));
  }
  if (family == "windmill") {
    want(params, 2, "windmill <m> <n>");
    return windmill(to_int(params[0], "m"), to_int(params[1], "n"));
  }
  if (family == "threshold") {
    want(params, 1, "threshold <ops>  (string over i/d, e.g. did)");
    return threshold_graph(params[0]);
  }
  if (family == "join") {
    want(params, 2, "join <G1> <G2>  (e.g. join P3 2K1)");
    return join(parse_small_graph_spec(params[0]), parse_small_graph_spec(params[1]));
  }
  if (family == "random-tree") {
    want(params, 1, "random-tree <n> [--seed S]");
    return random_tree(to_int(params[0], "n"), seed);
  }
  if (family == "random-connected") {
    want(params, 2, "random-connected <n> <p> [--seed S]");
    return random_connected(to_int(params[0], "n"), std::stod(params[1]), seed);
  }
  if (family == "random-cactus") {
    want(params, 1, "random-cactus <blocks> [--seed S]");
    return random_cactus(to_int(params[0], "blocks"), seed);
  }
  if (family == "random-block") {
    want(params, 1, "random-block <blocks> [--seed S]");
    return random_block_graph(to_int(params[0], "blocks"), seed);
  }
  if (family == "random-trivially-perfect") {
    want(params, 1, "random-trivially-perfect <n> [--seed S]");
    return random_trivially_perfect(to_int(params[0], "n"), seed);
  }
  throw std::invalid_argument("unknown family: " + family);
}

std::vector<std::string> family_names() {
  return {"path",          "cycle",    "complete",   "star",
          "complete-bipartite", "butterfly", "join-ring",  "windmill",
          "threshold",     "join",     "random-tree", "random-connected",
          "random-cactus", "random-block", "random-trivially-perfect"};
}

}  // namespace gathersim
