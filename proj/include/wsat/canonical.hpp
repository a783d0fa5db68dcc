#pragma once

#include <cstdint>

#include "wsat/graph.hpp"

namespace wsat {

// Largest order handled by the 64-bit canonical code (11 * 10 / 2 = 55 bits).
inline constexpr std::size_t kCanonicalMaxOrder = 11;

// Canonical code of a graph on at most kCanonicalMaxOrder vertices: the minimum,
// over relabelings that respect the iterated degree refinement, of the
// upper-triangle adjacency bits read column by column as in graph6 (pair (0,1)
// is the most significant bit). Isomorphic graphs get equal codes.
std::uint64_t canonical_code(const Graph& g);

// Graph whose adjacency bits are `code`, in the same bit order.
Graph graph_from_code(std::size_t n, std::uint64_t code);

}  // namespace wsat
