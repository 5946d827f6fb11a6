#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spext/graph.hpp"
#include "spext/spectral.hpp"

namespace spext {

enum class StepKind { Switch, AddEdge, DeleteEdge, Merge };

const char* to_string(StepKind k);
std::optional<StepKind> parse_step_kind(std::string_view s);

/// One rewrite. For Switch and Merge, the edges v-s (s in `moved`) were
/// replaced by u-s. For AddEdge and DeleteEdge, (u, v) is the edge.
struct TransformStep {
  StepKind kind = StepKind::Switch;
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> moved;
  double rho_before = 0.0;
  double rho_after = 0.0;
};

/// A rho-monotone rewrite sequence. Replaying `steps` on `initial` yields
/// `result`.
struct TransformTrace {
  Graph initial;
  std::vector<TransformStep> steps;
  Graph result;
};

struct AscentOptions {
  double tol = kDefaultTol;
  /// Perron entries closer than this are treated as tied; the lower vertex
  /// label then takes the receiving role.
  double tie_guard = 1e-8;
  /// Safety net against non-termination; never reached when the theory holds.
  int max_steps = 100000;
};

/// Raised when a rewrite breaks a property it is guaranteed to keep:
/// strict rho increase, class closure, or the t-count decrement. The
/// message carries the offending graph and step as edge lists.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, Graph before)
      : Error(what), before_(std::move(before)) {}
  const Graph& before() const noexcept { return before_; }

 private:
  Graph before_;
};

/// N(v) \ (N(u) ∪ {u}): the neighbors of v a switch from v to u may move.
std::vector<Vertex> private_neighbors(const Graph& g, Vertex v, Vertex u);

/// Replaces the edges v-s by u-s for every s in `moved`.
///
/// Requires u != v, `moved` nonempty and moved ⊆ N(v) \ (N(u) ∪ {u}); throws
/// PreconditionError otherwise. When the graph is connected and the Perron
/// entry of u is at least that of v, the spectral radius strictly increases.
/// That guarantee is checked by the ascent drivers, not here.
Graph sigma_switch(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved);

/// Switch of all of N(v) \ (N(u) ∪ {u}) onto u, for adjacent u, v of
/// degree >= 3 in a connected max-edge cactus. The caller orients the pair
/// so that x_u >= x_v. The result is again a max-edge cactus with one fewer
/// vertex of degree >= 3.
Graph merge_high_degree(const Graph& g, Vertex u, Vertex v);

/// Lexicographically least adjacent pair (u, v), u < v, where both
/// N(u) \ (N(v) ∪ {v}) and N(v) \ (N(u) ∪ {u}) are nonempty. Empty exactly
/// when the unicyclic graph is the star plus one edge.
std::optional<Edge> find_switchable_pair(const Graph& g);

/// Orders (a, b) so the first has the larger Perron entry; ties within
/// `tie_guard` go to the smaller label.
Edge orient_by_perron(const PerronResult& p, Vertex a, Vertex b, double tie_guard);

// Cactus normalization, one stage at a time. Each stage strictly increases
// the spectral radius whenever it changes the graph.

/// Shortens the least cycle of length >= 4 by one, leaving the dropped
/// vertex attached by a bridge. Empty when every cycle is a triangle.
std::optional<Graph> shrink_cycle_once(const Graph& g, const AscentOptions& opts = {});

/// Closes every pair of consecutive bridges u-v-w into a triangle.
Graph add_consecutive_bridge_edges(const Graph& g, const AscentOptions& opts = {});

/// Moves everything hanging off one end of a bridge between two triangles to
/// the other end, turning the bridge into a pendant edge. Empty when no such
/// bridge exists.
std::optional<Graph> eliminate_triangle_bridge(const Graph& g, const AscentOptions& opts = {});

/// Gathers pendant leaves onto shared supports and closes each same-support
/// pair into a triangle, leaving at most one pendant edge.
Graph consolidate_pendants(const Graph& g, const AscentOptions& opts = {});

/// Turns a connected cactus into a max-edge cactus by greedy edge additions
/// followed by the four stages above, repeated until a full pass is idle.
TransformTrace normalize_to_max_edge(const Graph& g, const AscentOptions& opts = {});

/// Repeated merge_high_degree on a max-edge cactus until at most one vertex
/// has degree >= 3. Performs exactly t(G) - 1 merges when t(G) > 1.
TransformTrace cactus_ascent(const Graph& g, const AscentOptions& opts = {});

/// normalize_to_max_edge followed by cactus_ascent. Ends at the extremal
/// cactus for every connected cactus of order >= 3.
TransformTrace maximize_cactus(const Graph& g, const AscentOptions& opts = {});

/// Switches along find_switchable_pair until none is left, ending at the
/// star plus one edge.
TransformTrace unicyclic_ascent(const Graph& g, const AscentOptions& opts = {});

/// Applies the trace's steps to its initial graph.
Graph replay(const TransformTrace& trace);

}  // namespace spext
