#include "spext/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace spext {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph shuffle_labels(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_tree needs n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(uniform(rng, 0, v - 1), v);
  return shuffle_labels(Graph(n, e), rng);
}

Graph random_cactus(int n, Rng& rng, double chord_prob) {
  Graph g = random_tree(n, rng);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::bernoulli_distribution take(chord_prob);
  for (auto [u, v] : candidates) {
    if (!take(rng)) continue;
    Graph h = with_edge(g, u, v);
    if (is_cactus(h)) g = std::move(h);
  }
  return g;
}

Graph random_unicyclic(int n, Rng& rng) {
  if (n < 3) throw PreconditionError("random_unicyclic needs n >= 3");
  Graph g = random_tree(n, rng);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
  auto [u, v] = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(candidates.size()) - 1))];
  return with_edge(g, u, v);
}

Graph random_triangle_cactus(int n, Rng& rng) {
  if (n < 3) throw PreconditionError("random_triangle_cactus needs n >= 3");
  std::vector<Edge> e;
  int used = 1;
  while (n - used >= 2) {
    Vertex root = uniform(rng, 0, used - 1);
    e.emplace_back(root, used);
    e.emplace_back(root, used + 1);
    e.emplace_back(used, used + 1);
    used += 2;
  }
  if (used < n) e.emplace_back(uniform(rng, 0, used - 1), used);
  return shuffle_labels(Graph(n, e), rng);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  if (n < 1) throw PreconditionError("random_connected_graph needs n >= 1");
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
}

}  // namespace spext
