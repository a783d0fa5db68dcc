#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "wsat/bitset.hpp"

namespace wsat {

using Vertex = std::uint32_t;

// Unordered vertex pair stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes the pair; throws InvalidArgument for a self-loop.
Edge make_edge(Vertex a, Vertex b);

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are kept in ascending lexicographic order. Adjacency is available both
// as sorted neighbour lists and as bitset rows; all queries are O(1) or
// proportional to the output.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws InvalidArgument on self-loops, out-of-range endpoints or repeated edges.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const { return a != b && rows_[a].test(b); }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  const std::vector<Bitset>& rows() const { return rows_; }

  bool is_complete() const { return edges_.size() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  // All vertex pairs that are not edges, ascending lexicographic order.
  std::vector<Edge> non_edges() const;

  Graph plus_edge(Edge e) const;
  Graph plus_edges(std::span<const Edge> extra) const;
  // Throws InvalidArgument when an edge to remove is absent.
  Graph minus_edges(std::span<const Edge> removed) const;

  // Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  // Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Star on n vertices with centre 0.
Graph star_graph(std::size_t n);

// Cayley graph of Z/k with the given connection set; s and k - s give the same
// edge. Throws InvalidArgument when k < 3 or a generator is 0 mod k.
Graph circulant(std::size_t k, std::span<const long> generators);

struct Subdivision {
  Graph graph;
  // Original edges in lexicographic order, aligned with `internal`.
  std::vector<Edge> original_edges;
  // Internal vertices of each replaced edge, in path order from e.u to e.v.
  std::vector<std::vector<Vertex>> internal;
};

// Replaces each edge {u,v} by a path of schedule[{u,v}] edges. Original vertices
// keep their labels; fresh vertices are appended edge by edge in lexicographic
// edge order. Throws InvalidArgument if an edge is missing from the schedule or
// has length 0.
Subdivision subdivide(const Graph& g, const std::map<Edge, std::size_t>& schedule);

// Vertex labels are offset in input order.
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace wsat
