#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "spext/errors.hpp"

namespace spext {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored canonically: every pair has
/// first < second and the list is sorted lexicographically, so two graphs
/// with the same labeled edge set compare equal regardless of how they were
/// constructed. Adjacency lists are derived and kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting self-loops, duplicates (in either
  /// orientation) and out-of-range endpoints. Throws InvalidGraph.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbor list. Throws InvalidGraph for v outside 0..n-1.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph with_edge(const Graph& g, Vertex u, Vertex v);
Graph without_edge(const Graph& g, Vertex u, Vertex v);

int max_degree(const Graph& g);

/// Vertices of degree >= 3.
int t_count(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// True iff a traversal from vertex 0 reaches every vertex. The
/// one-vertex graph is connected.
bool is_connected(const Graph& g);

/// Biconnected blocks and cut vertices.
struct BlockDecomposition {
  /// One sorted edge list per block; blocks sorted by their edge lists.
  std::vector<std::vector<Edge>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition block_decomposition(const Graph& g);

/// Every block is a single edge or a cycle. Disconnected graphs are
/// allowed: a forest of cacti is a cactus.
bool is_cactus(const Graph& g);

/// Connected with exactly n edges.
bool is_unicyclic(const Graph& g);

/// Every cycle has odd length. Decided through blocks: each block must be a
/// bridge or an odd cycle.
bool is_odd_cycle_graph(const Graph& g);

/// Edges lying on no cycle.
std::vector<Edge> bridges(const Graph& g);

// ---------------------------------------------------------------------------
// Canonical labeling

inline constexpr int kMaxCanonicalOrder = 12;

/// Adjacency rows of the graph under its canonical relabeling. Two graphs of
/// the same order get equal forms iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint16_t> rows;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Individualization-refinement search over equitable partitions with twin
/// pruning. Throws Unsupported above kMaxCanonicalOrder.
CanonicalForm canonical_label(const Graph& g);

Graph to_graph(const CanonicalForm& form);

/// The graph relabeled into canonical order.
inline Graph canonical_graph(const Graph& g) { return to_graph(canonical_label(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_label(a) == canonical_label(b);
}

}  // namespace spext
