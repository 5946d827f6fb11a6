#include "spext/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>

#include "spext/families.hpp"
#include "spext/io.hpp"
#include "spext/parallel.hpp"

namespace spext {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Cactus:
      return "CACTUS";
    case GraphClass::MaxEdgeCactus:
      return "MAX_EDGE_CACTUS";
    case GraphClass::Unicyclic:
      return "UNICYCLIC";
    case GraphClass::OddCycle:
      return "ODD_CYCLE";
    case GraphClass::Connected:
      return "CONNECTED";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view s) {
  std::string norm;
  for (char ch : s) norm += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (GraphClass c : {GraphClass::Cactus, GraphClass::MaxEdgeCactus, GraphClass::Unicyclic,
                       GraphClass::OddCycle, GraphClass::Connected})
    if (norm == to_string(c)) return c;
  return std::nullopt;
}

namespace {

using Predicate = std::function<bool(const Graph&)>;

// Membership test for the edge-deletion-closed superclass the generator
// walks through.
Predicate hereditary(GraphClass c) {
  switch (c) {
    case GraphClass::Cactus:
    case GraphClass::MaxEdgeCactus:
      return [](const Graph& g) { return is_cactus(g); };
    case GraphClass::Unicyclic:
      return [](const Graph& g) {
        auto k = static_cast<long>(components(g).size());
        return static_cast<long>(g.size()) - g.order() + k <= 1;
      };
    case GraphClass::OddCycle:
      return [](const Graph& g) { return is_odd_cycle_graph(g); };
    case GraphClass::Connected:
      return [](const Graph&) { return true; };
  }
  return {};
}

bool final_member(const Graph& g, GraphClass c) {
  if (!is_connected(g)) return false;
  if (c == GraphClass::Unicyclic) return static_cast<int>(g.size()) == g.order();
  return true;
}

void require_order(int n, int max, const char* what) {
  if (n < 1 || n > max)
    throw Unsupported(std::string(what) + " supports 1 <= n <= " + std::to_string(max) +
                      ", got n=" + std::to_string(n));
}

}  // namespace

std::vector<Graph> enumerate_class(int n, GraphClass c, const EnumerationOptions& opts) {
  require_order(n, std::min(opts.max_order, kMaxCanonicalOrder), "enumerate_class");
  Predicate keep = hereditary(c);

  std::vector<CanonicalForm> level{canonical_label(Graph(n, std::span<const Edge>{}))};
  std::vector<Graph> out;
  while (!level.empty()) {
    for (const auto& form : level) {
      Graph g = to_graph(form);
      if (final_member(g, c)) out.push_back(std::move(g));
    }

    std::vector<std::vector<CanonicalForm>> children(level.size());
    parallel_for(level.size(), opts.jobs, [&](std::size_t i) {
      Graph g = to_graph(level[i]);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph child = with_edge(g, u, v);
          if (keep(child)) children[i].push_back(canonical_label(child));
        }
    });
    std::vector<CanonicalForm> next;
    for (auto& part : children)
      next.insert(next.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  if (c == GraphClass::MaxEdgeCactus && !out.empty()) {
    std::size_t top = 0;
    for (const auto& g : out) top = std::max(top, g.size());
    std::erase_if(out, [top](const Graph& g) { return g.size() != top; });
  }
  return out;
}

std::vector<std::vector<Vertex>> all_cycles(const Graph& g) {
  if (g.order() > kMaxCycleOrder)
    throw Unsupported("all_cycles supports n <= " + std::to_string(kMaxCycleOrder));
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  // Cycles are rooted at their smallest vertex; the reflection is dropped by
  // requiring path[1] < last vertex.
  std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex at) {
    for (Vertex w : g.neighbors(at)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      extend(start, w);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassReport class_report(int n, GraphClass c, const EnumerationOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  auto members = enumerate_class(n, c, opts);
  ClassReport r;
  r.class_name = c;
  r.n = n;
  r.iso_class_count = members.size();
  if (!members.empty()) {
    std::vector<PerronResult> rho(members.size());
    parallel_for(members.size(), opts.jobs,
                 [&](std::size_t i) { rho[i] = spectral_radius(members[i], opts.tol); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
      if (rho[i].rho > rho[best].rho) best = i;
    r.max_rho = rho[best].rho;
    r.argmax_canonical = canonical_label(members[best]);
    r.unique_argmax = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (i != best && compare_rho(rho[best], rho[i], opts.guard) != RhoOrder::Greater)
        r.unique_argmax = false;
  }
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Graph expected_extremal(int n, GraphClass c) {
  switch (c) {
    case GraphClass::Cactus:
    case GraphClass::MaxEdgeCactus:
    case GraphClass::OddCycle:
      return extremal_cactus(n);
    case GraphClass::Unicyclic:
      return star_plus_edge(n);
    case GraphClass::Connected:
      break;
  }
  throw PreconditionError(std::string("no extremal theorem for class ") + to_string(c));
}

ClassReport verify_extremal(int n, GraphClass c, const EnumerationOptions& opts) {
  if (n < 3) throw PreconditionError("verify_extremal needs n >= 3");
  Graph expected = expected_extremal(n, c);
  ClassReport r = class_report(n, c, opts);
  Graph argmax = to_graph(r.argmax_canonical);
  std::string label = std::string(to_string(c)) + " n=" + std::to_string(n);
  if (r.argmax_canonical != canonical_label(expected))
    throw VerificationFailure(label + ": maximizer " + describe(argmax) +
                                  " is not isomorphic to the expected extremal graph",
                              argmax);
  if (!r.unique_argmax) {
    // Find a rival within the guard to report.
    PerronResult best = spectral_radius(argmax, opts.tol);
    for (const auto& g : enumerate_class(n, c, opts)) {
      if (canonical_label(g) == r.argmax_canonical) continue;
      if (compare_rho(best, spectral_radius(g, opts.tol), opts.guard) != RhoOrder::Greater)
        throw VerificationFailure(label + ": maximum not unique, rival " + describe(g), g);
    }
  }
  return r;
}

bool verify_odd_cycle_implies_cactus(int n, const EnumerationOptions& opts) {
  require_order(n, opts.max_sweep_order, "verify_odd_cycle_implies_cactus");
  auto graphs = enumerate_class(n, GraphClass::Connected, opts);
  std::vector<int> verdict(graphs.size(), 0);  // 0 ok, 1 parity mismatch, 2 not cactus
  parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    bool all_odd = true;
    for (const auto& cyc : all_cycles(g)) all_odd = all_odd && cyc.size() % 2 == 1;
    if (all_odd != is_odd_cycle_graph(g))
      verdict[i] = 1;
    else if (all_odd && !is_cactus(g))
      verdict[i] = 2;
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (verdict[i] == 1)
      throw VerificationFailure("odd-cycle test disagrees with cycle parity on " +
                                    describe(graphs[i]),
                                graphs[i]);
    if (verdict[i] == 2)
      throw VerificationFailure("odd-cycle graph that is not a cactus: " + describe(graphs[i]),
                                graphs[i]);
  }
  return true;
}

}  // namespace spext
