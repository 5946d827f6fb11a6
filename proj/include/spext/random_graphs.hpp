#pragma once

#include <random>

#include "spext/graph.hpp"

namespace spext {

using Rng = std::mt19937_64;

/// Uniform random relabeling of g.
Graph shuffle_labels(const Graph& g, Rng& rng);

/// Random recursive tree: vertex i attaches to a uniform earlier vertex,
/// then labels are shuffled. n >= 1.
Graph random_tree(int n, Rng& rng);

/// Random connected cactus: a random tree plus cactus-preserving chords,
/// each candidate accepted with probability `chord_prob`.
Graph random_cactus(int n, Rng& rng, double chord_prob = 0.5);

/// Random tree plus one chord. n >= 3.
Graph random_unicyclic(int n, Rng& rng);

/// Triangles glued at random existing vertices, plus one pendant edge when
/// n is even: always a max-edge cactus. n >= 3.
Graph random_triangle_cactus(int n, Rng& rng);

/// G(n, p) conditioned on connectivity by rejection. n >= 1.
Graph random_connected_graph(int n, double p, Rng& rng);

}  // namespace spext
