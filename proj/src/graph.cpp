#include "spext/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <string>

namespace spext {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  std::ostringstream os;
  os << '(' << u << ',' << v << ')';
  return os.str();
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InvalidGraph("negative vertex count " + std::to_string(n));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidGraph("endpoint out of range in edge " + pair_text(u, v) +
                         " for n=" + std::to_string(n));
    if (u == v) throw InvalidGraph("self-loop " + pair_text(u, v));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InvalidGraph("duplicate edge " + pair_text(dup->first, dup->second));

  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InvalidGraph("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> e = g.edges();
  e.emplace_back(u, v);
  return Graph(g.order(), e);
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
  Edge key{std::min(u, v), std::max(u, v)};
  std::vector<Edge> e;
  e.reserve(g.size());
  bool found = false;
  for (const auto& x : g.edges()) {
    if (x == key)
      found = true;
    else
      e.push_back(x);
  }
  if (!found) throw InvalidGraph("edge " + pair_text(u, v) + " not present");
  return Graph(g.order(), e);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int t_count(const Graph& g) {
  int t = 0;
  for (Vertex v = 0; v < g.order(); ++v) t += g.degree(v) >= 3 ? 1 : 0;
  return t;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return components(g).size() == 1;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> stack;
  BlockDecomposition out;
  int timer = 0;

  // Recursion depth is bounded by n; graphs here are desk-scale.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent != -1) is_cut[v] = true;
          std::vector<Edge> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            if (e == Edge{v, w}) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) is_cut[v] = true;
  };

  for (Vertex s = 0; s < n; ++s)
    if (disc[s] == -1) dfs(s, -1);

  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

namespace {

std::size_t block_vertex_count(const std::vector<Edge>& block) {
  std::vector<Vertex> vs;
  for (auto [u, v] : block) {
    vs.push_back(u);
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  return static_cast<std::size_t>(std::unique(vs.begin(), vs.end()) - vs.begin());
}

// A 2-connected block is a cycle iff it has as many edges as vertices.
bool block_is_cycle(const std::vector<Edge>& block) {
  return block.size() >= 3 && block.size() == block_vertex_count(block);
}

}  // namespace

bool is_cactus(const Graph& g) {
  for (const auto& b : block_decomposition(g).blocks)
    if (b.size() != 1 && !block_is_cycle(b)) return false;
  return true;
}

bool is_unicyclic(const Graph& g) {
  return g.order() >= 1 && static_cast<int>(g.size()) == g.order() && is_connected(g);
}

bool is_odd_cycle_graph(const Graph& g) {
  for (const auto& b : block_decomposition(g).blocks) {
    if (b.size() == 1) continue;
    if (!block_is_cycle(b) || b.size() % 2 == 0) return false;
  }
  return true;
}

std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& b : block_decomposition(g).blocks)
    if (b.size() == 1) out.push_back(b.front());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling

namespace {

using Rows = std::vector<std::uint16_t>;
using Coloring = std::vector<int>;

int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Re-ranks arbitrary keys into dense colors 0..k-1 preserving key order.
template <class Key>
Coloring rank_by(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                              sorted.begin());
  return out;
}

// Color refinement to the coarsest equitable partition finer than `c`.
// Ordering of new cells depends only on (old color, neighbor color counts),
// so the result is label-invariant.
Coloring refine(const Rows& adj, Coloring c) {
  const int n = static_cast<int>(adj.size());
  int k = color_count(c);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].assign(static_cast<std::size_t>(k) + 1, 0);
      sig[v][0] = c[v];
      for (int w = 0; w < n; ++w)
        if (adj[v] >> w & 1u) ++sig[v][1 + c[w]];
    }
    Coloring next = rank_by(sig);
    int nk = color_count(next);
    c = std::move(next);
    if (nk == k) return c;
    k = nk;
  }
}

struct CanonSearch {
  const Rows& adj;
  int n;
  Rows best;
  bool have_best = false;

  Rows relabel(const Coloring& c) const {
    Rows out(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (adj[v] >> w & 1u) out[c[v]] |= static_cast<std::uint16_t>(1u << c[w]);
    return out;
  }

  bool twins(int a, int b) const {
    std::uint16_t mask = static_cast<std::uint16_t>(~((1u << a) | (1u << b)));
    return (adj[a] & mask) == (adj[b] & mask);
  }

  void search(const Coloring& c) {
    int k = color_count(c);
    if (k == n) {
      Rows code = relabel(c);
      if (!have_best || code < best) {
        best = std::move(code);
        have_best = true;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(k, 0);
    for (int v = 0; v < n; ++v) ++size[c[v]];
    int cell = 0;
    while (size[cell] == 1) ++cell;

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (c[v] == cell) members.push_back(v);

    // Swapping two twins is an automorphism fixing everything already
    // individualized, so one representative per twin class suffices.
    std::vector<int> reps;
    for (int v : members) {
      bool dup = false;
      for (int r : reps)
        if (twins(r, v)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(v);
    }

    for (int w : reps) {
      std::vector<int> key(n);
      for (int v = 0; v < n; ++v) key[v] = 2 * c[v] + (c[v] == cell && v != w ? 1 : 0);
      search(refine(adj, rank_by(key)));
    }
  }
};

}  // namespace

CanonicalForm canonical_label(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw Unsupported("canonical labeling supports n <= " +
                      std::to_string(kMaxCanonicalOrder) + ", got n=" + std::to_string(n));
  Rows adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  CanonicalForm form{n, {}};
  if (n == 0) return form;
  CanonSearch s{adj, n, {}, false};
  s.search(refine(adj, Coloring(n, 0)));
  form.rows = std::move(s.best);
  return form;
}

Graph to_graph(const CanonicalForm& form) {
  std::vector<Edge> e;
  for (int u = 0; u < form.n; ++u)
    for (int v = u + 1; v < form.n; ++v)
      if (form.rows[u] >> v & 1u) e.emplace_back(u, v);
  return Graph(form.n, e);
}

}  // namespace spext
