#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spext/enumeration.hpp"
#include "spext/families.hpp"
#include "spext/random_graphs.hpp"
#include "spext/spectral.hpp"

using namespace spext;

namespace {

Graph paw() { return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

void check_pair(const Graph& g, const PerronResult& p) {
  double nrm = 0.0;
  for (double x : p.vector) nrm += x * x;
  CHECK(std::abs(std::sqrt(nrm) - 1.0) <= 1e-12);
  CHECK(p.residual <= kDefaultTol);
  if (is_connected(g) && g.size() > 0)
    for (double x : p.vector) CHECK(x > 0.0);
  // A x = rho x componentwise within the residual
  for (Vertex v = 0; v < g.order(); ++v) {
    double ax = 0.0;
    for (Vertex w : g.neighbors(v)) ax += p.vector[w];
    CHECK(std::abs(ax - p.rho * p.vector[v]) <= p.residual + 1e-15);
  }
}

}  // namespace

TEST_CASE("cycles have spectral radius 2") {
  for (int n = 3; n <= 20; ++n) {
    auto p = spectral_radius(cycle_graph(n));
    CHECK(std::abs(p.rho - 2.0) <= kDefaultTol);
    check_pair(cycle_graph(n), p);
  }
}

TEST_CASE("stars have spectral radius sqrt(n-1)") {
  for (int n = 2; n <= 20; ++n) {
    auto p = spectral_radius(star_graph(n));
    CHECK(std::abs(p.rho - std::sqrt(n - 1.0)) <= kDefaultTol);
    check_pair(star_graph(n), p);
  }
}

TEST_CASE("paw matches the largest root of x^4 - 4x^2 - 2x + 1") {
  // The hand-expanded polynomial must be what the exact expansion gives.
  CHECK(oracle::char_poly(paw()) == std::vector<long long>{1, 0, -4, -2, 1});
  double root = oracle::largest_root({1, 0, -4, -2, 1}, 0.0, 5.0);
  CHECK(std::abs(oracle::eval({1, 0, -4, -2, 1}, root)) < 1e-12);
  CHECK(root == doctest::Approx(2.170086486626034).epsilon(1e-13));
  auto p = spectral_radius(paw());
  CHECK(std::abs(p.rho - root) <= 1e-9);
  check_pair(paw(), p);
}

TEST_CASE("bowtie has spectral radius (1 + sqrt 17) / 2") {
  Graph bowtie = extremal_cactus(5);
  auto c = oracle::char_poly(bowtie);
  std::vector<double> poly(c.begin(), c.end());
  double closed = (1.0 + std::sqrt(17.0)) / 2.0;
  CHECK(std::abs(oracle::eval(poly, closed)) < 1e-9);
  auto p = spectral_radius(bowtie);
  CHECK(std::abs(p.rho - closed) <= kDefaultTol);
  CHECK(p.rho == doctest::Approx(2.56155).epsilon(1e-5));
}

TEST_CASE("edgeless graphs") {
  auto p = spectral_radius(make_graph(4, {}));
  CHECK(p.rho == 0.0);
  CHECK(p.residual == 0.0);
  for (double x : p.vector) CHECK(x == doctest::Approx(0.5));
  CHECK_THROWS_AS(spectral_radius(Graph{}), PreconditionError);
  CHECK_THROWS_AS(spectral_radius(paw(), 0.0), PreconditionError);
}

TEST_CASE("disconnected graphs use the dominant component") {
  // K_{1,3} (rho sqrt 3) next to a triangle (rho 2)
  Graph g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {5, 6}, {6, 4}});
  auto p = spectral_radius(g);
  CHECK(std::abs(p.rho - 2.0) <= kDefaultTol);
  for (Vertex v = 0; v < 4; ++v) CHECK(p.vector[v] == 0.0);
  check_pair(g, p);
}

TEST_CASE("unreachable tolerance reports the best estimate") {
  try {
    spectral_radius(path_graph(6), 1e-300);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best().rho == doctest::Approx(2.0 * std::cos(M_PI / 7.0)).epsilon(1e-9));
    CHECK(e.best().iterations > 0);
  }
}

TEST_CASE("compare_rho") {
  CHECK(compare_rho(paw(), cycle_graph(4)) == RhoOrder::Greater);
  CHECK(compare_rho(cycle_graph(4), paw()) == RhoOrder::Less);
  CHECK(compare_rho(cycle_graph(5), cycle_graph(7), 1e-10) == RhoOrder::Indistinguishable);
  CHECK(compare_rho(star_graph(5), star_graph(4)) == RhoOrder::Greater);
  CHECK(std::string(to_string(RhoOrder::Indistinguishable)) == "INDISTINGUISHABLE");
}

TEST_CASE("Rayleigh quotients of nonnegative unit vectors stay below rho") {
  Rng rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_connected_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
    auto p = spectral_radius(g);
    check_pair(g, p);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> y(g.order());
      double nrm = 0.0;
      for (double& x : y) {
        x = unit(rng);
        nrm += x * x;
      }
      for (double& x : y) x /= std::sqrt(nrm);
      double q = 0.0;
      for (auto [u, v] : g.edges()) q += 2.0 * y[u] * y[v];
      CHECK(q <= p.rho + p.residual);
    }
  }
}

TEST_CASE("average degree <= rho <= max degree") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected_graph(2 + static_cast<int>(rng() % 10), 0.5, rng);
    auto p = spectral_radius(g);
    double avg = 2.0 * static_cast<double>(g.size()) / g.order();
    CHECK(avg <= p.rho + p.residual + 1e-12);
    CHECK(p.rho <= max_degree(g) + p.residual + 1e-12);
  }
}

TEST_CASE("edge deletion strictly lowers rho on connected graphs up to 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_class(n, GraphClass::Connected)) {
      auto full = spectral_radius(g);
      for (auto [u, v] : g.edges())
        CHECK(compare_rho(full, spectral_radius(without_edge(g, u, v))) == RhoOrder::Greater);
    }
}

TEST_CASE("edge deletion never raises rho on disconnected graphs") {
  oracle::for_each_labeled_graph(5, [](const Graph& g) {
    if (is_connected(g)) return;
    auto full = spectral_radius(g);
    for (auto [u, v] : g.edges())
      CHECK(compare_rho(full, spectral_radius(without_edge(g, u, v))) != RhoOrder::Less);
  });
}

TEST_CASE("power iteration agrees with the characteristic polynomial up to 6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_class(n, GraphClass::Connected))
      CHECK(std::abs(spectral_radius(g).rho - oracle::rho_by_char_poly(g)) <= 1e-8);
}

TEST_CASE("bipartite graphs converge") {
  // Symmetric spectra stall unshifted power iteration.
  for (int n = 2; n <= 30; ++n) {
    auto p = spectral_radius(path_graph(n));
    CHECK(std::abs(p.rho - 2.0 * std::cos(M_PI / (n + 1))) <= 1e-9);
  }
  Graph k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(std::abs(spectral_radius(k33).rho - 3.0) <= kDefaultTol);
}
