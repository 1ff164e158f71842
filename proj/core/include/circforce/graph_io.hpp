#pragma once

#include <circforce/circulant.hpp>
#include <circforce/graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace circforce {

/// Parses "Cn(s1,s2,...)". Whitespace is ignored anywhere; errors carry line and column.
CirculantSpec parse_circulant(std::string_view text);

/// A parsed graph expression together with a circulant it is isomorphic to, if known.
/// circulant_labeling is true when graph == build_circulant(*circulant) exactly.
struct GraphExpression {
    Graph graph;
    std::optional<CirculantSpec> circulant;
    bool circulant_labeling = false;
    bool vertex_transitive = false;
    std::string label;
};

/// Grammar:
///   expr := term | term "box" term | term "torus" cycle
///   term := "C" n "(" s ("," s)* ")" | "C" n | "K" n
/// "Cn" alone is the n-cycle, "Kn" the complete graph.
GraphExpression parse_graph_expression(std::string_view text);

/// "# order N" header followed by sorted "u v" lines with u < v.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Accepts the write_edge_list format; without a header the order is max index + 1.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");
std::string to_dot(const Graph& g, std::string_view name = "G");

} // namespace circforce
