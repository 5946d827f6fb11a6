#pragma once

#include "spext/graph.hpp"

namespace spext {

/// K_{1,n-1} centered at 0. n >= 2.
Graph star_graph(int n);

/// Star K_{1,n-1} plus the leaf pairs (1,2), (3,4), ...: floor((n-1)/2)
/// triangles at vertex 0, and one pendant leaf left over when n is even.
/// The unique cactus of order n with the largest spectral radius. n >= 3.
Graph extremal_cactus(int n);

/// Star K_{1,n-1} plus the edge (1,2). The unique unicyclic graph of order n
/// with the largest spectral radius. n >= 3.
Graph star_plus_edge(int n);

/// C_n on 0-1-...-(n-1)-0. n >= 3.
Graph cycle_graph(int n);

/// P_n on 0-1-...-(n-1). n >= 1.
Graph path_graph(int n);

/// n - 1 + floor((n-1)/2) for n >= 3, n - 1 below that.
int max_cactus_edges(int n);

/// Connected cactus with max_cactus_edges(n) edges.
bool is_max_edge_cactus(const Graph& g);

/// Connected cactus to which no non-edge can be added without breaking the
/// cactus property. Implied by is_max_edge_cactus, not conversely.
bool is_edge_maximal_cactus(const Graph& g);

}  // namespace spext
