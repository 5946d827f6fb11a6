#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spext/enumeration.hpp"
#include "spext/graph.hpp"
#include "spext/transforms.hpp"

namespace spext {

// Edge-list text: a header line "n m" followed by m lines "u v" with 0-based
// endpoints. '#' starts a comment running to end of line; blank lines are
// ignored. Output is canonical: edges sorted, single spaces, no comments.

/// Throws ParseError naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// Compact one-line rendering for diagnostics: "n=4 [(0,1),(0,2)]".
std::string describe(const Graph& g);

/// {"n": .., "edges": [[u,v], ...]}
nlohmann::ordered_json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::ordered_json& j);

/// {"initial": graph, "steps": [{"kind", "u", "v", "moved", "rho_before",
/// "rho_after"}], "final": graph}
nlohmann::ordered_json to_json(const TransformTrace& t);
TransformTrace trace_from_json(const nlohmann::ordered_json& j);

/// Fields named after the CSV columns; argmax is a graph object.
nlohmann::ordered_json to_json(const ClassReport& r);

inline constexpr const char* kReportCsvHeader = "n,class,iso_classes,max_rho,argmax,unique,runtime_ms";

/// One CSV row without trailing newline. argmax is the canonical edge list
/// rendered as "u-v u-v ..." inside double quotes.
std::string report_csv_row(const ClassReport& r);

}  // namespace spext
