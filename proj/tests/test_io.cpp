#include <doctest.h>

#include <sstream>

#include "spext/families.hpp"
#include "spext/io.hpp"
#include "spext/transforms.hpp"

using namespace spext;

namespace {
int parse_line(const std::string& text) {
  try {
    read_edge_list_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("edge list parsing") {
  Graph g = read_edge_list_string("# paw\n4 4\n0 1\n\n1 2 # inline\n2 0\n3 0\n");
  CHECK(g == make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}));
  CHECK(read_edge_list_string("3 0\n").size() == 0);
  CHECK(read_edge_list_string("  2   1 \n\t1  0\n") == make_graph(2, {{0, 1}}));
}

TEST_CASE("edge list errors carry the line") {
  CHECK(parse_line("") == 1);
  CHECK(parse_line("# only\n\n") == 3);
  CHECK(parse_line("3 x\n") == 1);
  CHECK(parse_line("3 2\n0 1\n") == 3);
  CHECK(parse_line("3 1\n0 1\n1 2\n") == 3);
  CHECK(parse_line("3 1\n0 3\n") == 2);
  CHECK(parse_line("3 2\n0 1\n1 1\n") == 3);
  CHECK(parse_line("3 2\n0 1\n1 0\n") == 3);
  CHECK(parse_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_line("3 1\n-1 1\n") == 2);
  try {
    read_edge_list_string("3 1\n0 7\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
}

TEST_CASE("edge list round trip is canonical") {
  Graph g = make_graph(5, {{3, 1}, {0, 4}, {2, 1}});
  std::string text = edge_list_string(g);
  CHECK(text == "5 3\n0 4\n1 2\n1 3\n");
  CHECK(read_edge_list_string(text) == g);
  CHECK(edge_list_string(read_edge_list_string(text)) == text);
  std::ostringstream os;
  write_edge_list(os, g);
  CHECK(os.str() == text);
  CHECK(describe(g) == "n=5 [(0,4),(1,2),(1,3)]");
}

TEST_CASE("graph and trace JSON") {
  Graph g = cycle_graph(5);
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(to_json(make_graph(3, {{0, 1}})).dump() == R"({"n":3,"edges":[[0,1]]})");

  auto t = maximize_cactus(cycle_graph(6));
  auto j = to_json(t);
  CHECK(j.contains("initial"));
  CHECK(j.contains("final"));
  auto back = trace_from_json(j);
  CHECK(back.initial == t.initial);
  CHECK(back.result == t.result);
  REQUIRE(back.steps.size() == t.steps.size());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(back.steps[i].kind == t.steps[i].kind);
    CHECK(back.steps[i].moved == t.steps[i].moved);
    CHECK(back.steps[i].rho_after == t.steps[i].rho_after);
  }
  CHECK(replay(back) == t.result);
  CHECK_THROWS(graph_from_json(nlohmann::ordered_json{{"n", 2}, {"edges", {{0, 0}}}}));
}

TEST_CASE("report CSV and JSON") {
  ClassReport r;
  r.class_name = GraphClass::Unicyclic;
  r.n = 4;
  r.iso_class_count = 2;
  r.max_rho = 2.170086486626034;
  r.argmax_canonical = canonical_label(star_plus_edge(4));
  r.unique_argmax = true;
  r.runtime_ms = 1.5;
  std::string row = report_csv_row(r);
  CHECK(row.rfind("4,UNICYCLIC,2,", 0) == 0);
  Graph arg = to_graph(r.argmax_canonical);
  std::string edges;
  for (auto [u, v] : arg.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  CHECK(row.find("\"" + edges + "\",true,") != std::string::npos);
  auto j = to_json(r);
  CHECK(j["iso_classes"] == 2);
  CHECK(j["class"] == "UNICYCLIC");
  CHECK(graph_from_json(j["argmax"]) == arg);
}
