#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/rational.hpp"

namespace wsat {

// Edges of g with at least one end in s. Throws InvalidArgument for vertices
// outside g.
std::size_t m_f(const Graph& g, std::span<const Vertex> s);

// (m_f(g, s) - 1) / |s|; throws InvalidArgument for an empty s.
Rational gamma_of(const Graph& g, std::span<const Vertex> s);

enum class GammaMethod { brute, ratio };
std::string to_string(GammaMethod m);

struct GammaResult {
  Rational value;
  std::vector<Vertex> witness;  // sorted, nonempty
  GammaMethod method = GammaMethod::brute;
  std::uint64_t nodes_explored = 0;  // subsets (brute) or min-cut solves (ratio)
};

inline constexpr std::size_t kGammaBruteCap = 20;

// Exhaustive minimum of gamma over nonempty subsets, ties broken by smaller
// |S| and then lexicographically smaller S. Subsets of one size are skipped
// when a degree-sum bound shows they cannot beat the incumbent. Parallel over
// subsets; the reduction is order-independent.
GammaResult gamma_min_brute(const Graph& g, std::size_t cap = kGammaBruteCap);

// Exact minimum by Dinkelbach iteration. Each step maximizes e(T) - lambda|T|
// over T != V(g) (T the complement of S) as a project-selection min cut; when
// the cut's optimum is T = V every vertex is forced out of T in turn.
GammaResult gamma_min_ratio(const Graph& g);

// min over nonempty S of m_f(S) - 1 - lambda |S|, with a minimizing S.
std::pair<Rational, std::vector<Vertex>> gamma_deficit(const Graph& g, const Rational& lambda);

struct WsatResult;

// Single-threaded reference versions of the parallel kernels.
namespace serial {
GammaResult gamma_min_brute(const Graph& g, std::size_t cap = kGammaBruteCap);
std::pair<Rational, std::vector<Vertex>> gamma_deficit(const Graph& g, const Rational& lambda);
WsatResult wsat_exact(std::size_t n, const Graph& f, std::uint64_t budget = 1'000'000);
}  // namespace serial

inline constexpr std::size_t kFTildeCap = 20;

// Disjoint union over all supergraphs of f + K_pad on the same vertex set, in
// increasing order of the added non-edge subset (bit i = i-th non-edge in
// lexicographic order). With dedup only the first member of each isomorphism
// class is kept. Throws BudgetExceeded when there are more than `cap`
// non-edges.
Graph build_f_tilde(const Graph& f, std::size_t clique_pad, bool dedup = false, std::size_t cap = kFTildeCap);

// G_i of the F-tilde construction: a clique K of size |V(F-tilde)| + 1 on
// vertices 0..|K|-1, U = the first |V(f) - S| vertices of K standing for
// V(f) - S in increasing order, and blocks S_1..S_i appended after K, each
// wired to U and inside itself like f minus e*, with e* the smallest edge of
// f meeting s. Throws InvalidArgument when s is not gamma-minimizing, when no
// edge meets s, or when every vertex outside s has a neighbour in s.
Graph ftilde_host_sequence(const Graph& f, std::span<const Vertex> s, std::size_t i);

struct WsatResult {
  std::size_t n = 0;
  std::optional<std::size_t> value;  // set when conclusive
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::optional<Graph> witness;        // smallest canonical code among minimum hosts
  std::vector<Graph> all_witnesses;    // every minimum host up to isomorphism
  std::uint64_t graphs_tested = 0;
  bool conclusive() const { return value.has_value(); }
};

// Exact wsat(n, f) by orderly generation of n-vertex graphs up to isomorphism,
// level by level in edge count. Hosts in which some non-universal vertex has
// degree below delta(f) - 1 are skipped, and the search starts at the edge
// count this forces. When more than `budget` hosts would be tested the result
// is inconclusive with the bounds reached so far. n <= 11.
WsatResult wsat_exact(std::size_t n, const Graph& f, std::uint64_t budget = 1'000'000);

// g plus i disjoint copies of (p0, owned). Throws InvalidArgument when an owned
// edge has no end in p0.
Graph replicate_component(const Graph& g, std::span<const Vertex> p0, std::span<const Edge> owned, std::size_t i);

// (max(gamma_f, delta/2 - 1/(delta+1)), delta - 1).
std::pair<Rational, Rational> w_f_bounds(const Graph& f);

}  // namespace wsat
