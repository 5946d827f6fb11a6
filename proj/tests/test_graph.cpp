#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spext/enumeration.hpp"
#include "spext/families.hpp"
#include "spext/random_graphs.hpp"

using namespace spext;

namespace {

Graph paw() { return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }
Graph bowtie() { return make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }
Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}
Graph bridged_triangles() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

// Definitional cactus test: distinct cycles share at most one vertex.
bool cactus_by_cycles(const Graph& g) {
  auto cycles = all_cycles(g);
  std::vector<std::set<Vertex>> sets;
  for (const auto& c : cycles) sets.emplace_back(c.begin(), c.end());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      int shared = 0;
      for (Vertex v : sets[i]) shared += sets[j].count(v) ? 1 : 0;
      if (shared > 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("make_graph canonicalizes and validates") {
  Graph c3 = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.order() == 3);
  CHECK(c3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(make_graph(3, {{2, 1}, {0, 2}, {1, 0}}) == c3);

  Graph empty = make_graph(4, {});
  CHECK(empty.order() == 4);
  CHECK(empty.size() == 0);

  CHECK_THROWS_WITH_AS(make_graph(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate edge (0,1)"),
                       InvalidGraph);
  CHECK_THROWS_WITH_AS(make_graph(3, {{1, 1}}), doctest::Contains("self-loop (1,1)"), InvalidGraph);
  CHECK_THROWS_WITH_AS(make_graph(3, {{0, 3}}), doctest::Contains("(0,3)"), InvalidGraph);
  CHECK_THROWS_AS(make_graph(3, {{-1, 2}}), InvalidGraph);
}

TEST_CASE("canonicalization is idempotent") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_connected_graph(7, 0.4, rng);
    CHECK(make_graph(g.order(), g.edges()) == g);
  }
}

TEST_CASE("neighbors") {
  CHECK(star_graph(5).neighbors(0) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(cycle_graph(4).neighbors(0) == std::vector<Vertex>{1, 3});
  CHECK(make_graph(3, {{0, 1}}).neighbors(2).empty());
  CHECK_THROWS_AS(cycle_graph(4).neighbors(4), InvalidGraph);
  CHECK(max_degree(star_graph(5)) == 4);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(make_graph(1, {})));
}

TEST_CASE("block_decomposition examples") {
  auto paw_blocks = block_decomposition(paw());
  CHECK(paw_blocks.blocks == std::vector<std::vector<Edge>>{{{0, 1}, {0, 2}, {1, 2}}, {{0, 3}}});
  CHECK(paw_blocks.cut_vertices == std::vector<Vertex>{0});

  auto c5 = block_decomposition(cycle_graph(5));
  CHECK(c5.blocks.size() == 1);
  CHECK(c5.cut_vertices.empty());

  auto p4 = block_decomposition(path_graph(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("block_decomposition partitions edges and cut vertices disconnect") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_class(n, GraphClass::Connected)) {
      auto bd = block_decomposition(g);
      std::vector<Edge> all;
      for (const auto& b : bd.blocks) all.insert(all.end(), b.begin(), b.end());
      std::sort(all.begin(), all.end());
      CHECK(all == g.edges());
      for (Vertex c = 0; c < n; ++c) {
        // Delete c by isolating it, then look at the rest.
        std::vector<Edge> rest;
        for (auto [u, v] : g.edges())
          if (u != c && v != c) rest.emplace_back(u, v);
        auto comps = components(Graph(n, rest));
        bool disconnects = comps.size() > 2;  // {c} plus at least two pieces
        bool listed = std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), c);
        CHECK(disconnects == listed);
      }
    }
  }
}

TEST_CASE("is_cactus examples") {
  CHECK(is_cactus(bowtie()));
  CHECK_FALSE(is_cactus(complete(4)));
  CHECK(is_cactus(path_graph(6)));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) CHECK(is_cactus(random_tree(9, rng)));
  // forest of cacti
  CHECK(is_cactus(make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}})));
}

TEST_CASE("is_cactus agrees with the cycle definition on connected graphs up to 7") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_class(n, GraphClass::Connected))
      REQUIRE_MESSAGE(is_cactus(g) == cactus_by_cycles(g), "n=", n);
}

TEST_CASE("is_unicyclic") {
  CHECK(is_unicyclic(cycle_graph(4)));
  CHECK_FALSE(is_unicyclic(path_graph(5)));
  CHECK_FALSE(is_unicyclic(complete(4)));
  CHECK_FALSE(is_unicyclic(make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("is_odd_cycle_graph") {
  CHECK(is_odd_cycle_graph(bowtie()));
  CHECK_FALSE(is_odd_cycle_graph(cycle_graph(4)));
  CHECK(is_odd_cycle_graph(extremal_cactus(6)));
  CHECK_FALSE(is_odd_cycle_graph(complete(4)));
  CHECK(is_odd_cycle_graph(path_graph(3)));
}

TEST_CASE("is_odd_cycle_graph agrees with cycle parity on all graphs up to 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_class(n, GraphClass::Connected)) {
      bool all_odd = true;
      for (const auto& c : all_cycles(g)) all_odd = all_odd && c.size() % 2 == 1;
      REQUIRE(is_odd_cycle_graph(g) == all_odd);
    }
  }
  // Disconnected inputs: every labeled graph on 5 vertices.
  oracle::for_each_labeled_graph(5, [](const Graph& g) {
    bool all_odd = true;
    for (const auto& c : all_cycles(g)) all_odd = all_odd && c.size() % 2 == 1;
    REQUIRE(is_odd_cycle_graph(g) == all_odd);
  });
}

TEST_CASE("odd-cycle graphs are cacti on every labeled graph up to 6") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [](const Graph& g) {
      if (is_odd_cycle_graph(g)) REQUIRE(is_cactus(g));
    });
}

TEST_CASE("t_count") {
  CHECK(t_count(extremal_cactus(7)) == 1);
  CHECK(t_count(cycle_graph(6)) == 0);
  CHECK(t_count(bridged_triangles()) == 2);
}

TEST_CASE("bridges") {
  CHECK(bridges(bridged_triangles()) == std::vector<Edge>{{2, 3}});
  CHECK(bridges(path_graph(3)) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(bridges(cycle_graph(5)).empty());
}

TEST_CASE("canonical_label examples") {
  Graph a = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  Graph b = make_graph(3, {{2, 0}, {0, 1}, {1, 2}});
  CHECK(canonical_label(a) == canonical_label(b));
  CHECK(canonical_label(path_graph(4)) != canonical_label(star_graph(4)));
  CHECK(canonical_label(extremal_cactus(5)) != canonical_label(cycle_graph(5)));
  CHECK_THROWS_AS(canonical_label(path_graph(13)), Unsupported);
  CHECK_NOTHROW(canonical_label(extremal_cactus(12)));
}

TEST_CASE("canonical_label is invariant under relabeling") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_connected_graph(n, 0.35, rng);
    CHECK(canonical_label(g) == canonical_label(shuffle_labels(g, rng)));
    CHECK(are_isomorphic(canonical_graph(g), g));
  }
  // highly symmetric inputs
  for (int n = 1; n <= 12; ++n) {
    Graph e(n, std::span<const Edge>{});
    CHECK(canonical_label(e) == canonical_label(shuffle_labels(e, rng)));
    CHECK(canonical_label(complete(n)) == canonical_label(shuffle_labels(complete(n), rng)));
  }
}

TEST_CASE("canonical_label is a complete invariant on random pairs up to 8") {
  // Pairs with equal degree sequences are the interesting ones; sample many
  // sparse graphs so collisions of size and degrees are common.
  Rng rng(5);
  int noniso_seen = 0, iso_seen = 0;
  for (int i = 0; i < 600; ++i) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph a = random_connected_graph(n, 0.3, rng);
    Graph b = rng() % 2 ? shuffle_labels(a, rng) : random_connected_graph(n, 0.3, rng);
    if (a.size() != b.size()) continue;
    bool brute = oracle::brute_isomorphic(a, b);
    CHECK(brute == (canonical_label(a) == canonical_label(b)));
    (brute ? iso_seen : noniso_seen)++;
  }
  CHECK(iso_seen > 50);
  CHECK(noniso_seen > 50);
}
