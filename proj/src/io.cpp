#include "spext/io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace spext {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view s, long& a, long& b) {
  auto read = [&](long& out) {
    auto start = s.find_first_not_of(" \t");
    if (start == std::string_view::npos) return false;
    s.remove_prefix(start);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || out < 0) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
  };
  if (!read(a)) return false;
  if (s.empty() || (s.front() != ' ' && s.front() != '\t')) return false;
  if (!read(b)) return false;
  return trim(s).empty();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    long a = 0, b = 0;
    if (!parse_pair(line, a, b))
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    if (!have_header) {
      if (a > std::numeric_limits<int>::max() || b > a * (a - 1) / 2)
        throw ParseError(line_no, "edge count " + std::to_string(b) + " impossible for n=" +
                                      std::to_string(a));
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long>(edges.size()) == m)
      throw ParseError(line_no, "more than the " + std::to_string(m) + " declared edges");
    if (a >= n || b >= n)
      throw ParseError(line_no, "endpoint out of range in (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") for n=" + std::to_string(n));
    if (a == b) throw ParseError(line_no, "self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second)
      throw ParseError(line_no, "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header \"n m\"");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " [";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << '(' << u << ',' << v << ')';
    first = false;
  }
  os << ']';
  return os.str();
}

nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::ordered_json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), edges);
}

nlohmann::ordered_json to_json(const TransformTrace& t) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"kind", to_string(s.kind)},
                     {"u", s.u},
                     {"v", s.v},
                     {"moved", s.moved},
                     {"rho_before", s.rho_before},
                     {"rho_after", s.rho_after}});
  return {{"initial", to_json(t.initial)}, {"steps", std::move(steps)}, {"final", to_json(t.result)}};
}

TransformTrace trace_from_json(const nlohmann::ordered_json& j) {
  TransformTrace t;
  t.initial = graph_from_json(j.at("initial"));
  t.result = graph_from_json(j.at("final"));
  for (const auto& s : j.at("steps")) {
    auto kind = parse_step_kind(s.at("kind").get<std::string>());
    if (!kind) throw Error("unknown step kind " + s.at("kind").dump());
    t.steps.push_back({*kind, s.at("u").get<int>(), s.at("v").get<int>(),
                       s.at("moved").get<std::vector<Vertex>>(), s.at("rho_before").get<double>(),
                       s.at("rho_after").get<double>()});
  }
  return t;
}

nlohmann::ordered_json to_json(const ClassReport& r) {
  return {{"n", r.n},
          {"class", to_string(r.class_name)},
          {"iso_classes", r.iso_class_count},
          {"max_rho", r.max_rho},
          {"argmax", to_json(to_graph(r.argmax_canonical))},
          {"unique", r.unique_argmax},
          {"runtime_ms", r.runtime_ms}};
}

std::string report_csv_row(const ClassReport& r) {
  std::ostringstream os;
  os << r.n << ',' << to_string(r.class_name) << ',' << r.iso_class_count << ','
     << std::setprecision(17) << r.max_rho << ",\"";
  bool first = true;
  Graph argmax = to_graph(r.argmax_canonical);
  for (auto [u, v] : argmax.edges()) {
    os << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  os << "\"," << (r.unique_argmax ? "true" : "false") << ',' << std::setprecision(6)
     << std::fixed << r.runtime_ms;
  return os.str();
}

}  // namespace spext
