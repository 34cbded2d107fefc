#pragma once

#include "packprod/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace packprod {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list text: first non-comment line "n m", then m lines "u v".
/// '#' starts a comment that runs to the end of the line.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Writes "n m" and one "u v" line per edge; each header line is emitted as "# <line>".
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {});

/// Standard 6-bit graph6 encoding, up to 62 vertices. An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

Graph read_graph_file(const std::string& path, GraphFormat format);

} // namespace packprod
