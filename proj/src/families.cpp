#include "spext/families.hpp"

#include <string>

namespace spext {

namespace {

void require_order(int n, int min, const char* what) {
  if (n < min)
    throw PreconditionError(std::string(what) + " needs n >= " + std::to_string(min) +
                            ", got " + std::to_string(n));
}

std::vector<Edge> star_edges(int n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return e;
}

}  // namespace

Graph star_graph(int n) {
  require_order(n, 2, "star_graph");
  return Graph(n, star_edges(n));
}

Graph extremal_cactus(int n) {
  require_order(n, 3, "extremal_cactus");
  auto e = star_edges(n);
  for (Vertex a = 1; a + 1 < n; a += 2) e.emplace_back(a, a + 1);
  return Graph(n, e);
}

Graph star_plus_edge(int n) {
  require_order(n, 3, "star_plus_edge");
  auto e = star_edges(n);
  e.emplace_back(1, 2);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  require_order(n, 3, "cycle_graph");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  require_order(n, 1, "path_graph");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

int max_cactus_edges(int n) {
  if (n < 1) throw PreconditionError("max_cactus_edges needs n >= 1");
  if (n <= 2) return n - 1;
  return n - 1 + (n - 1) / 2;
}

bool is_max_edge_cactus(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && is_cactus(g) &&
         static_cast<int>(g.size()) == max_cactus_edges(g.order());
}

bool is_edge_maximal_cactus(const Graph& g) {
  if (g.order() < 1 || !is_connected(g) || !is_cactus(g)) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v) && is_cactus(with_edge(g, u, v))) return false;
  return true;
}

}  // namespace spext
