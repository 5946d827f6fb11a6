#include "spext/spectral.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace spext {

namespace {

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

// Local adjacency of one component, indices 0..k-1.
std::vector<std::vector<int>> local_adjacency(const Graph& g, const std::vector<Vertex>& comp) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (Vertex w : g.neighbors(comp[i])) adj[i].push_back(index[w]);
  return adj;
}

void multiply(const std::vector<std::vector<int>>& adj, const std::vector<double>& x,
              std::vector<double>& y) {
  for (std::size_t i = 0; i < adj.size(); ++i) {
    double s = 0.0;
    for (int j : adj[i]) s += x[j];
    y[i] = s;
  }
}

struct LocalPair {
  double rho = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

LocalPair power_iteration(const std::vector<std::vector<int>>& adj, double tol, long cap) {
  const std::size_t k = adj.size();
  LocalPair out;
  out.x.assign(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> ax(k), r(k);
  for (long it = 0; it <= cap; ++it) {
    multiply(adj, out.x, ax);
    out.rho = std::inner_product(out.x.begin(), out.x.end(), ax.begin(), 0.0);
    for (std::size_t i = 0; i < k; ++i) r[i] = ax[i] - out.rho * out.x[i];
    out.residual = norm2(r);
    out.iterations = static_cast<int>(it);
    if (out.residual <= tol) {
      out.converged = true;
      return out;
    }
    if (it == cap) break;
    // x <- (A + I) x / ||(A + I) x||
    for (std::size_t i = 0; i < k; ++i) ax[i] += out.x[i];
    double nrm = norm2(ax);
    for (std::size_t i = 0; i < k; ++i) out.x[i] = ax[i] / nrm;
  }
  return out;
}

}  // namespace

long iteration_cap(int n) { return 100L * n * n; }

PerronResult spectral_radius(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("spectral_radius needs at least one vertex");
  if (!(tol > 0.0)) throw PreconditionError("spectral_radius needs tol > 0");

  PerronResult out;
  if (g.size() == 0) {
    out.vector.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    return out;
  }

  const long cap = iteration_cap(n);
  bool have = false;
  bool failed = false;
  int total_iterations = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    LocalPair p = power_iteration(local_adjacency(g, comp), tol, cap);
    total_iterations += p.iterations;
    if (!have || p.rho > out.rho) {
      out.rho = p.rho;
      out.residual = p.residual;
      out.vector.assign(n, 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) out.vector[comp[i]] = p.x[i];
      have = true;
    }
    failed = failed || !p.converged;
  }
  out.iterations = total_iterations;
  if (failed) {
    std::ostringstream os;
    os << "power iteration did not reach residual " << tol << " within " << cap
       << " products (best rho " << out.rho << ", residual " << out.residual << ")";
    throw ConvergenceError(os.str(), out);
  }
  return out;
}

const char* to_string(RhoOrder o) {
  switch (o) {
    case RhoOrder::Less:
      return "LESS";
    case RhoOrder::Greater:
      return "GREATER";
    case RhoOrder::Indistinguishable:
      return "INDISTINGUISHABLE";
  }
  return "?";
}

RhoOrder compare_rho(const PerronResult& a, const PerronResult& b, double tol) {
  double margin = a.residual + b.residual + tol;
  double d = a.rho - b.rho;
  if (d > margin) return RhoOrder::Greater;
  if (-d > margin) return RhoOrder::Less;
  return RhoOrder::Indistinguishable;
}

RhoOrder compare_rho(const Graph& a, const Graph& b, double tol) {
  return compare_rho(spectral_radius(a, tol), spectral_radius(b, tol), tol);
}

}  // namespace spext
