#pragma once

#include <vector>

#include "spext/errors.hpp"
#include "spext/graph.hpp"

namespace spext {

inline constexpr double kDefaultTol = 1e-10;

/// Dominant eigenpair of an adjacency matrix.
///
/// `vector` has unit Euclidean norm and is strictly positive when the graph
/// is connected and has an edge. `residual` is ||A x - rho x||; for a
/// symmetric matrix some eigenvalue lies within `residual` of `rho`, which is
/// the error bound compare_rho relies on.
struct PerronResult {
  double rho = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  int iterations = 0;
};

/// Raised when power iteration hits its cap. Carries the best estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, PerronResult best)
      : Error(what), best_(std::move(best)) {}
  const PerronResult& best() const noexcept { return best_; }

 private:
  PerronResult best_;
};

/// Power iteration on A + I from the uniform vector; stops when the
/// residual drops to `tol`. Disconnected graphs are solved per component and
/// the largest component pair is embedded (zeros elsewhere). Edgeless graphs
/// give rho = 0, the uniform unit vector and residual 0.
///
/// The shift keeps the iteration from stalling on bipartite graphs, whose
/// spectrum is symmetric about zero.
PerronResult spectral_radius(const Graph& g, double tol = kDefaultTol);

/// Matrix-vector product cap used by spectral_radius: 100 n^2.
long iteration_cap(int n);

enum class RhoOrder { Less, Greater, Indistinguishable };

const char* to_string(RhoOrder o);

/// Greater iff rho(a) - rho(b) exceeds both residuals plus `tol`; Less
/// symmetrically; otherwise Indistinguishable.
RhoOrder compare_rho(const PerronResult& a, const PerronResult& b, double tol = kDefaultTol);
RhoOrder compare_rho(const Graph& a, const Graph& b, double tol = kDefaultTol);

}  // namespace spext
