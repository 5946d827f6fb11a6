#include "spext/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "spext/families.hpp"
#include "spext/io.hpp"

namespace spext {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Switch:
      return "SWITCH";
    case StepKind::AddEdge:
      return "ADD_EDGE";
    case StepKind::DeleteEdge:
      return "DELETE_EDGE";
    case StepKind::Merge:
      return "MERGE";
  }
  return "?";
}

std::optional<StepKind> parse_step_kind(std::string_view s) {
  for (StepKind k : {StepKind::Switch, StepKind::AddEdge, StepKind::DeleteEdge, StepKind::Merge})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::vector<Vertex> private_neighbors(const Graph& g, Vertex v, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (w != u && !g.has_edge(u, w)) out.push_back(w);
  return out;
}

Graph sigma_switch(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> moved) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw PreconditionError("switch endpoints out of range");
  if (u == v) throw PreconditionError("switch needs u != v");
  if (moved.empty()) throw PreconditionError("switch needs a nonempty moved set");
  std::vector<Vertex> s(moved.begin(), moved.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw PreconditionError("switch moved set has duplicates");
  for (Vertex w : s) {
    if (w == u) throw PreconditionError("switch moved set contains u=" + std::to_string(u));
    if (w < 0 || w >= g.order() || !g.has_edge(v, w))
      throw PreconditionError("moved vertex " + std::to_string(w) + " is not a neighbor of v=" +
                              std::to_string(v));
    if (g.has_edge(u, w))
      throw PreconditionError("moved vertex " + std::to_string(w) +
                              " is already a neighbor of u=" + std::to_string(u));
  }
  std::vector<Edge> e;
  e.reserve(g.size());
  for (const auto& [a, b] : g.edges()) {
    Vertex other = a == v ? b : (b == v ? a : -1);
    if (other >= 0 && std::binary_search(s.begin(), s.end(), other))
      e.emplace_back(u, other);
    else
      e.emplace_back(a, b);
  }
  return Graph(g.order(), e);
}

Graph merge_high_degree(const Graph& g, Vertex u, Vertex v) {
  if (!is_max_edge_cactus(g)) throw PreconditionError("merge needs a max-edge cactus");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
    throw PreconditionError("merge needs adjacent vertices");
  if (g.degree(u) < 3 || g.degree(v) < 3)
    throw PreconditionError("merge needs both endpoints of degree >= 3");
  auto s = private_neighbors(g, v, u);
  return sigma_switch(g, u, v, s);
}

std::optional<Edge> find_switchable_pair(const Graph& g) {
  if (!is_unicyclic(g)) throw PreconditionError("find_switchable_pair needs a unicyclic graph");
  for (const auto& [a, b] : g.edges())
    if (!private_neighbors(g, a, b).empty() && !private_neighbors(g, b, a).empty())
      return Edge{a, b};
  return std::nullopt;
}

Edge orient_by_perron(const PerronResult& p, Vertex a, Vertex b, double tie_guard) {
  double xa = p.vector.at(a), xb = p.vector.at(b);
  if (std::abs(xa - xb) <= tie_guard) return {std::min(a, b), std::max(a, b)};
  return xa > xb ? Edge{a, b} : Edge{b, a};
}

namespace {

// Holds the current graph with its Perron pair and appends checked steps.
class Ascent {
 public:
  Ascent(Graph initial, const AscentOptions& opts)
      : opts_(opts), perron_(spectral_radius(initial, opts.tol)) {
    trace_.initial = initial;
    trace_.result = std::move(initial);
  }

  const Graph& graph() const { return trace_.result; }
  const PerronResult& perron() const { return perron_; }
  const AscentOptions& options() const { return opts_; }

  Edge orient(Vertex a, Vertex b) const { return orient_by_perron(perron_, a, b, opts_.tie_guard); }

  void add_edge(Vertex u, Vertex v) {
    apply(StepKind::AddEdge, u, v, {}, with_edge(graph(), u, v));
  }

  void switch_from(StepKind kind, Vertex u, Vertex v, std::vector<Vertex> moved) {
    std::sort(moved.begin(), moved.end());
    Graph next = sigma_switch(graph(), u, v, moved);
    apply(kind, u, v, std::move(moved), std::move(next));
  }

  TransformTrace finish() && { return std::move(trace_); }

  bool changed_since(std::size_t mark) const { return trace_.steps.size() > mark; }
  std::size_t mark() const { return trace_.steps.size(); }

 private:
  void apply(StepKind kind, Vertex u, Vertex v, std::vector<Vertex> moved, Graph next) {
    if (static_cast<int>(trace_.steps.size()) >= opts_.max_steps)
      throw TheoremViolation("ascent exceeded " + std::to_string(opts_.max_steps) + " steps",
                             graph());
    PerronResult after = spectral_radius(next, opts_.tol);
    RhoOrder order = compare_rho(after, perron_, opts_.tol);
    bool connected = is_connected(graph());
    bool ok = true;
    switch (kind) {
      case StepKind::Switch:
      case StepKind::Merge:
      case StepKind::AddEdge:
        ok = connected ? order == RhoOrder::Greater : order != RhoOrder::Less;
        break;
      case StepKind::DeleteEdge:
        ok = connected ? order == RhoOrder::Less : order != RhoOrder::Greater;
        break;
    }
    TransformStep step{kind, u, v, std::move(moved), perron_.rho, after.rho};
    if (!ok) {
      std::ostringstream os;
      os << to_string(kind) << " u=" << u << " v=" << v << " moved=[";
      for (std::size_t i = 0; i < step.moved.size(); ++i)
        os << (i ? "," : "") << step.moved[i];
      os << "] on " << describe(graph()) << " gave rho " << perron_.rho << " -> " << after.rho
         << " (" << to_string(order) << ", residuals " << perron_.residual << ", "
         << after.residual << ")";
      throw TheoremViolation(os.str(), graph());
    }
    trace_.steps.push_back(std::move(step));
    trace_.result = std::move(next);
    perron_ = std::move(after);
  }

  AscentOptions opts_;
  PerronResult perron_;
  TransformTrace trace_;
};

void require_connected_cactus(const Graph& g, const char* what) {
  if (!is_connected(g) || !is_cactus(g))
    throw PreconditionError(std::string(what) + " needs a connected cactus");
}

bool all_cycles_triangles(const Graph& g) {
  for (const auto& b : block_decomposition(g).blocks)
    if (b.size() != 1 && b.size() != 3) return false;
  return true;
}

std::vector<std::vector<Vertex>> bridge_neighbors(const Graph& g) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.order()));
  for (auto [a, b] : bridges(g)) {
    out[a].push_back(b);
    out[b].push_back(a);
  }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

bool has_consecutive_bridges(const Graph& g) {
  for (const auto& row : bridge_neighbors(g))
    if (row.size() >= 2) return true;
  return false;
}

bool all_bridges_pendant(const Graph& g) {
  for (auto [a, b] : bridges(g))
    if (g.degree(a) != 1 && g.degree(b) != 1) return false;
  return true;
}

// Greedy lexicographic additions that keep the cactus property. One pass
// suffices: a rejected edge stays rejected once more edges are present.
void make_edge_maximal(Ascent& a) {
  const int n = a.graph().order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!a.graph().has_edge(u, v) && is_cactus(with_edge(a.graph(), u, v))) a.add_edge(u, v);
}

bool shrink_step(Ascent& a) {
  const Graph& g = a.graph();
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() < 4) continue;
    auto [u, v] = a.orient(block.front().first, block.front().second);
    Vertex y = -1;
    for (auto [p, q] : block) {
      if (p == v && q != u) y = q;
      if (q == v && p != u) y = p;
    }
    a.switch_from(StepKind::Switch, u, v, {y});
    return true;
  }
  return false;
}

bool close_bridge_pair(Ascent& a) {
  auto bn = bridge_neighbors(a.graph());
  for (const auto& row : bn) {
    if (row.size() >= 2) {
      a.add_edge(row[0], row[1]);
      return true;
    }
  }
  return false;
}

bool triangle_bridge_step(Ascent& a) {
  const Graph& g = a.graph();
  auto bn = bridge_neighbors(g);
  // An endpoint lies on a triangle iff it has an edge that is not a bridge.
  auto on_cycle = [&](Vertex x) { return g.degree(x) > static_cast<int>(bn[x].size()); };
  for (auto [p, q] : bridges(g)) {
    if (!on_cycle(p) || !on_cycle(q)) continue;
    auto [u, v] = a.orient(p, q);
    a.switch_from(StepKind::Switch, u, v, private_neighbors(g, v, u));
    return true;
  }
  return false;
}

bool pendant_step(Ascent& a) {
  const Graph& g = a.graph();
  std::map<Vertex, std::vector<Vertex>> leaves_by_support;
  for (Vertex x = 0; x < g.order(); ++x)
    if (g.degree(x) == 1) leaves_by_support[g.neighbors(x).front()].push_back(x);

  for (const auto& [support, leaves] : leaves_by_support) {
    if (leaves.size() >= 2) {
      a.add_edge(leaves[0], leaves[1]);
      return true;
    }
  }
  if (leaves_by_support.size() >= 2) {
    auto it = leaves_by_support.begin();
    Vertex s1 = it->first;
    Vertex s2 = std::next(it)->first;
    auto [u, v] = a.orient(s1, s2);
    Vertex y = leaves_by_support.at(v).front();
    a.switch_from(StepKind::Switch, u, v, {y});
    return true;
  }
  return false;
}

void run_shrink(Ascent& a) {
  while (shrink_step(a)) {
  }
}
void run_close_bridges(Ascent& a) {
  while (close_bridge_pair(a)) {
  }
}
void run_triangle_bridges(Ascent& a) {
  while (triangle_bridge_step(a)) {
  }
}
void run_pendants(Ascent& a) {
  while (pendant_step(a)) {
  }
}

void append(TransformTrace& into, TransformTrace&& tail) {
  for (auto& s : tail.steps) into.steps.push_back(std::move(s));
  into.result = std::move(tail.result);
}

}  // namespace

std::optional<Graph> shrink_cycle_once(const Graph& g, const AscentOptions& opts) {
  require_connected_cactus(g, "shrink_cycle_once");
  Ascent a(g, opts);
  if (!shrink_step(a)) return std::nullopt;
  return std::move(a).finish().result;
}

Graph add_consecutive_bridge_edges(const Graph& g, const AscentOptions& opts) {
  require_connected_cactus(g, "add_consecutive_bridge_edges");
  if (!all_cycles_triangles(g))
    throw PreconditionError("add_consecutive_bridge_edges needs all cycles to be triangles");
  Ascent a(g, opts);
  run_close_bridges(a);
  return std::move(a).finish().result;
}

std::optional<Graph> eliminate_triangle_bridge(const Graph& g, const AscentOptions& opts) {
  require_connected_cactus(g, "eliminate_triangle_bridge");
  if (!all_cycles_triangles(g) || has_consecutive_bridges(g))
    throw PreconditionError(
        "eliminate_triangle_bridge needs triangle cycles and no consecutive bridges");
  Ascent a(g, opts);
  if (!triangle_bridge_step(a)) return std::nullopt;
  return std::move(a).finish().result;
}

Graph consolidate_pendants(const Graph& g, const AscentOptions& opts) {
  require_connected_cactus(g, "consolidate_pendants");
  if (g.order() < 3) throw PreconditionError("consolidate_pendants needs n >= 3");
  if (!all_cycles_triangles(g) || !all_bridges_pendant(g))
    throw PreconditionError("consolidate_pendants needs triangle cycles and pendant bridges");
  Ascent a(g, opts);
  run_pendants(a);
  return std::move(a).finish().result;
}

TransformTrace normalize_to_max_edge(const Graph& g, const AscentOptions& opts) {
  require_connected_cactus(g, "normalize_to_max_edge");
  Ascent a(g, opts);
  if (g.order() >= 3) {
    make_edge_maximal(a);
    std::size_t before;
    do {
      before = a.mark();
      run_shrink(a);
      run_close_bridges(a);
      run_triangle_bridges(a);
      run_pendants(a);
    } while (a.changed_since(before));
  }
  if (!is_max_edge_cactus(a.graph()))
    throw TheoremViolation("normalization ended at " + describe(a.graph()) +
                               ", which is not a max-edge cactus",
                           a.graph());
  return std::move(a).finish();
}

TransformTrace cactus_ascent(const Graph& g, const AscentOptions& opts) {
  if (!is_max_edge_cactus(g)) throw PreconditionError("cactus_ascent needs a max-edge cactus");
  Ascent a(g, opts);
  while (t_count(a.graph()) > 1) {
    const Graph& cur = a.graph();
    std::optional<Edge> pick;
    for (const auto& [p, q] : cur.edges())
      if (cur.degree(p) >= 3 && cur.degree(q) >= 3) {
        pick = Edge{p, q};
        break;
      }
    if (!pick)
      throw TheoremViolation("no adjacent pair of degree >= 3 in " + describe(cur), cur);
    auto [u, v] = a.orient(pick->first, pick->second);
    int t_before = t_count(cur);
    Graph before = cur;
    Graph merged = merge_high_degree(cur, u, v);
    a.switch_from(StepKind::Merge, u, v, private_neighbors(cur, v, u));
    if (a.graph() != merged) throw TheoremViolation("merge replay mismatch", before);
    if (t_count(a.graph()) != t_before - 1 || !is_max_edge_cactus(a.graph()))
      throw TheoremViolation("merge on " + describe(before) +
                                 " did not keep a max-edge cactus with t reduced by one",
                             before);
  }
  return std::move(a).finish();
}

TransformTrace maximize_cactus(const Graph& g, const AscentOptions& opts) {
  if (!is_cactus(g)) throw PreconditionError("maximize_cactus needs a cactus");
  if (!is_connected(g)) throw PreconditionError("maximize_cactus needs a connected graph");
  TransformTrace trace = normalize_to_max_edge(g, opts);
  if (g.order() >= 3) append(trace, cactus_ascent(trace.result, opts));
  return trace;
}

TransformTrace unicyclic_ascent(const Graph& g, const AscentOptions& opts) {
  if (!is_unicyclic(g) || g.order() < 3)
    throw PreconditionError("unicyclic_ascent needs a unicyclic graph");
  Ascent a(g, opts);
  while (auto pair = find_switchable_pair(a.graph())) {
    auto [u, v] = a.orient(pair->first, pair->second);
    Graph before = a.graph();
    a.switch_from(StepKind::Switch, u, v, private_neighbors(before, v, u));
    if (!is_unicyclic(a.graph()))
      throw TheoremViolation("switch left the unicyclic class from " + describe(before), before);
  }
  return std::move(a).finish();
}

Graph replay(const TransformTrace& trace) {
  Graph g = trace.initial;
  for (const auto& s : trace.steps) {
    switch (s.kind) {
      case StepKind::Switch:
      case StepKind::Merge:
        g = sigma_switch(g, s.u, s.v, s.moved);
        break;
      case StepKind::AddEdge:
        g = with_edge(g, s.u, s.v);
        break;
      case StepKind::DeleteEdge:
        g = without_edge(g, s.u, s.v);
        break;
    }
  }
  return g;
}

}  // namespace spext
