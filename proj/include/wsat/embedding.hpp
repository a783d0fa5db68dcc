#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "wsat/bitset.hpp"
#include "wsat/graph.hpp"

namespace wsat {

// Injective map pattern vertex -> host vertex sending every pattern edge to a
// host edge (subgraph embedding, not induced).
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Mutable adjacency used by searches that toggle single edges on a host
// (percolation closure); avoids rebuilding a Graph per candidate edge.
class HostAdjacency {
 public:
  explicit HostAdjacency(const Graph& g);

  std::size_t order() const { return rows_.size(); }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  void add_edge(Edge e);
  void remove_edge(Edge e);

 private:
  std::vector<Bitset> rows_;
  std::vector<std::uint32_t> degrees_;
};

struct SearchLimits {
  // Search nodes per query before BudgetExceeded is thrown.
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t seeds_tried = 0;
};

// Pattern-side preprocessing reused across many host queries.
//
// The search is a backtracking CSP over pattern vertices:
//  * the forced host edge is seeded as the image of one pattern edge, one seed
//    per orbit of ordered pattern edges under twin swaps and permutations of
//    isomorphic components;
//  * the next vertex is the frontier vertex with the fewest candidates
//    (common host neighbourhood of mapped neighbours, minus used vertices,
//    filtered by degree), ties by higher pattern degree then lower index;
//    a fresh component starts from its highest-degree vertex, largest
//    component first;
//  * twins (vertices with N(a)-b == N(b)-a, e.g. the vertices of a clique)
//    that are not seeded must receive increasing images, and isomorphic
//    components that do not hold the seed must have increasing minimum images;
//  * degree-sequence dominance of the free host vertices over the unplaced
//    pattern vertices is checked at the root and whenever a component closes.
// Candidates are tried in ascending host order, so the first embedding found
// is a deterministic function of (pattern, host, forced edge).
class CopyFinder {
 public:
  explicit CopyFinder(const Graph& pattern);

  const Graph& pattern() const { return pattern_; }

  // First embedding whose image contains `forced`. Precondition: `forced` is a
  // host edge.
  std::optional<Embedding> find_with_edge(const HostAdjacency& host, Edge forced, SearchLimits limits = {},
                                          SearchStats* stats = nullptr) const;

  // First embedding with no forced-edge requirement.
  std::optional<Embedding> find_any(const HostAdjacency& host, SearchLimits limits = {},
                                    SearchStats* stats = nullptr) const;

  // Component id of every pattern vertex, components ordered by smallest vertex.
  const std::vector<int>& component_of() const { return comp_of_; }

 private:
  friend class EmbeddingSearch;

  Graph pattern_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::vector<Vertex>> comps_;
  std::vector<int> comp_of_;
  std::vector<int> comp_group_;            // isomorphism group id per component
  std::vector<int> twin_class_;            // -1 when the vertex has no twin
  std::vector<std::vector<Vertex>> twin_members_;
  std::vector<std::pair<Vertex, Vertex>> seeds_;  // canonical ordered pattern edges
  std::vector<std::uint32_t> distinct_degrees_;
};

// One-shot helpers around CopyFinder.
std::optional<Embedding> find_new_copy(const Graph& pattern, const Graph& host, Edge forced);
std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host);
bool are_isomorphic(const Graph& a, const Graph& b);

// Direct check: injective, edge-preserving, and (when given) covering `forced`.
bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& emb,
                        std::optional<Edge> forced = std::nullopt);
bool is_valid_embedding(const Graph& pattern, const HostAdjacency& host, const Embedding& emb,
                        std::optional<Edge> forced = std::nullopt);

// Host edges covered by the embedding, as images of pattern edges.
std::vector<Edge> image_edges(const Graph& pattern, const Embedding& emb);

}  // namespace wsat
