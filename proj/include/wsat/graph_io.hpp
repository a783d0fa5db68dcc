#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wsat/graph.hpp"

namespace wsat {

// graph6 as defined by the nauty/gtools format description. Orders up to
// 62 use the one-byte header, up to 258047 the 126+3 byte form and larger
// orders the 126 126 + 6 byte form. An optional ">>graph6<<" prefix and
// trailing newline are accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge-list text: "n m" then m lines "u v" (0-based). Output lists edges in
// ascending lexicographic order, one per line, newline-terminated.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Picks the format from content: a first line of two integers is an edge
// list, anything else is graph6. Throws ParseError on malformed files.
Graph read_graph_file(const std::filesystem::path& path);
Graph parse_graph_text(std::string_view text);

}  // namespace wsat
