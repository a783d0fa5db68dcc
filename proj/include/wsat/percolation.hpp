#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wsat/embedding.hpp"
#include "wsat/graph.hpp"
#include "wsat/rational.hpp"

namespace wsat {

struct PercolationStep {
  Edge edge;
  Embedding witness;
};

struct PercolationTrace {
  Graph host;
  Graph pattern;
  std::vector<PercolationStep> steps;

  // Host plus every added edge.
  Graph final_graph() const;
  bool reaches_complete() const;
};

struct ClosureOptions {
  SearchLimits per_query;
};

// Percolation closure by lexicographic passes: each pass walks the current
// non-edges in ascending order and keeps every edge whose addition creates a
// copy of the pattern through it; passes repeat until one adds nothing.
// A copy is new exactly when its image contains the added edge, so the
// witness of every step is such an embedding.
PercolationTrace closure(const Graph& host, const Graph& pattern, ClosureOptions opts = {});
PercolationTrace closure(const Graph& host, const CopyFinder& finder, ClosureOptions opts = {});

bool is_weakly_saturated(const Graph& host, const Graph& pattern);
bool is_weakly_saturated(const Graph& host, const CopyFinder& finder, ClosureOptions opts = {});

// Replays the trace and re-checks every witness against the state at its step.
bool validate_trace(const PercolationTrace& trace);

// [{"edge":[u,v],"witness":[...]}, ...]
nlohmann::json trace_to_json(const PercolationTrace& trace);
PercolationTrace trace_from_json(const nlohmann::json& j, const Graph& host, const Graph& pattern);

class ActivationError : public std::runtime_error {
 public:
  enum class Kind { incomplete_trace, unactivated_vertex };
  ActivationError(Kind kind, const std::string& what, std::optional<Vertex> vertex = std::nullopt)
      : std::runtime_error(what), kind_(kind), vertex_(vertex) {}
  Kind kind() const { return kind_; }
  std::optional<Vertex> vertex() const { return vertex_; }

 private:
  Kind kind_;
  std::optional<Vertex> vertex_;
};

struct ActivationPart {
  std::vector<Vertex> vertices;  // sorted
  Edge activating_edge;
  std::size_t step = 0;  // index of the activating step in the trace
  // Host edges with an end in the part used by the activating copy, plus the
  // activating edge when it touches the part. Sorted.
  std::vector<Edge> owned;
  bool owns_activating_edge = false;
};

struct ActivationPartition {
  Graph host;
  Graph g_hat;  // host plus all activating edges
  std::vector<ActivationPart> parts;  // in activation order
  std::vector<Edge> free_edges;       // edges of g_hat owned by no part, sorted
  std::vector<int> part_of;           // part index per host vertex
};

// Throws ActivationError when the trace does not end at the complete graph or
// when some vertex is never activated.
ActivationPartition activation_partition(const PercolationTrace& trace);

// One owned edge per part, indexed like ap.parts.
using AMatching = std::vector<Edge>;

// Number of A-matchings (product of owned-set sizes), saturating at UINT64_MAX.
// Throws InvalidArgument when a part owns nothing.
std::uint64_t count_a_matchings(const ActivationPartition& ap);

// Calls `visit` for every A-matching in lexicographic order (first part most
// significant); stops early when `visit` returns false.
void enumerate_a_matchings(const ActivationPartition& ap, const std::function<bool(const AMatching&)>& visit);

// The matching at position `index` of the lexicographic order.
AMatching a_matching_at(const ActivationPartition& ap, std::uint64_t index);

// g_hat minus the matching. Throws InvalidArgument for an invalid matching.
Graph rotate(const ActivationPartition& ap, const AMatching& m);

// Rotation components of the contracted multigraph, as lists of part indices
// sorted by their smallest member. Throws BudgetExceeded when the number of
// A-matchings exceeds `max_matchings`.
std::vector<std::vector<std::size_t>> rotation_components(const ActivationPartition& ap,
                                                          std::uint64_t max_matchings = 1'000'000);

// m_star / |p|; throws InvalidArgument for an empty part.
Rational part_density(std::size_t part_size, std::size_t owned_edges);

}  // namespace wsat
