#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spext/graph.hpp"
#include "spext/spectral.hpp"

namespace spext {

/// Graph classes the enumerator can generate. `Connected` (all connected
/// graphs) backs the sweeps over every graph of an order.
enum class GraphClass { Cactus, MaxEdgeCactus, Unicyclic, OddCycle, Connected };

const char* to_string(GraphClass c);
/// Accepts the upper-case names ("MAX_EDGE_CACTUS") and lower-case dashed
/// forms ("max-edge-cactus", "max_edge_cactus").
std::optional<GraphClass> parse_graph_class(std::string_view s);

struct EnumerationOptions {
  /// Largest order accepted by enumerate_class and the verifiers.
  int max_order = 9;
  /// Largest order for sweeps over all connected graphs.
  int max_sweep_order = 8;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
  /// Eigensolver residual target.
  double tol = kDefaultTol;
  /// Guard used when deciding whether the maximum is unique.
  double guard = 1e-8;
};

/// One representative per isomorphism class of connected graphs of order n
/// in the class, each in canonical labeling, ordered by edge count then
/// canonical form.
///
/// Generation adds one edge at a time starting from the edgeless graph,
/// deduplicating every level by canonical form. Every class here is closed
/// under edge deletion, so pruning non-members loses nothing. Max-edge cacti
/// are the connected cacti attaining the largest edge count found, not a
/// closed-form count.
std::vector<Graph> enumerate_class(int n, GraphClass c, const EnumerationOptions& opts = {});

inline constexpr int kMaxCycleOrder = 9;

/// Every simple cycle exactly once, as a vertex sequence starting at its
/// smallest vertex with the smaller of the two neighbors second.
std::vector<std::vector<Vertex>> all_cycles(const Graph& g);

struct ClassReport {
  GraphClass class_name = GraphClass::Cactus;
  int n = 0;
  std::size_t iso_class_count = 0;
  double max_rho = 0.0;
  CanonicalForm argmax_canonical;
  /// Exactly one class attains the maximum beyond the guard.
  bool unique_argmax = false;
  double runtime_ms = 0.0;
};

/// Enumerates the class and locates the spectral-radius maximizer.
ClassReport class_report(int n, GraphClass c, const EnumerationOptions& opts = {});

/// The graph the extremal theorems predict as the unique maximizer.
Graph expected_extremal(int n, GraphClass c);

/// A brute-force check found a graph contradicting the claim.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, Graph counterexample)
      : Error(what), counterexample_(std::move(counterexample)) {}
  const Graph& counterexample() const noexcept { return counterexample_; }

 private:
  Graph counterexample_;
};

/// class_report plus the assertion that the maximizer is expected_extremal
/// and unique. Throws VerificationFailure with the offending graph.
ClassReport verify_extremal(int n, GraphClass c, const EnumerationOptions& opts = {});

/// Over every connected graph of order n: the block-based odd-cycle test
/// agrees with the parity of all_cycles, and odd-cycle graphs are cacti.
/// Throws VerificationFailure on a counterexample. n <= max_sweep_order.
bool verify_odd_cycle_implies_cactus(int n, const EnumerationOptions& opts = {});

}  // namespace spext
