#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wsat/graph.hpp"
#include "wsat/rational.hpp"

namespace wsat {

struct ConstructionParams {
  unsigned delta = 0;
  Rational ratio;
  std::size_t k = 0;
  std::size_t p = 0;  // unused for delta >= 6
  std::size_t t = 0;
  std::size_t clique_size = 0;

  nlohmann::json to_json() const;
};

// Smallest k >= k_min with the required parity and congruence for delta 3 or 4,
// and the matching p and t. Throws InvalidArgument outside [3/2, 2) for delta 3
// and [2, 3) for delta 4, or for other delta.
ConstructionParams solve_params(unsigned delta, const Rational& ratio, std::size_t k_min);
inline constexpr std::size_t kDefaultKMin3 = 8;
inline constexpr std::size_t kDefaultKMin4 = 9;

// 3 |V(G)| + delta + 2, where G is the part outside the clique.
std::size_t default_clique_size(unsigned delta, std::size_t g_order);

// Circulant on k vertices with generators 1..floor(delta/2), plus k/2 when delta
// is odd. Throws InvalidArgument when k <= delta or delta is odd and k is odd.
Graph sparse_family(unsigned delta, std::size_t k);

// Indices round(i * total / count) for i < count, rounding halves up; a
// collision moves to the next unused index (cyclically).
std::vector<std::size_t> spread_indices(std::size_t total, std::size_t count);

struct Construction {
  std::string family;
  ConstructionParams params;
  Graph graph;
  std::vector<Vertex> witness_set;
  Rational predicted_gamma;
  // Base edges of G replaced by paths of p + 1 edges (delta 3 and 4).
  std::vector<Edge> long_paths;
  std::optional<Rational> predicted_limit;
  std::optional<std::uint64_t> seed;

  // {family, params, witness_set, predicted_gamma, graph}, plus
  // predicted_limit / seed when present.
  nlohmann::json metadata() const;
};

Construction build_delta3(const ConstructionParams& params);
Construction build_delta4(const ConstructionParams& params);

struct HighDeltaOptions {
  bool expander_check = true;
  std::size_t max_attempts = 1'000'000;  // configuration-model draws in total
  std::size_t clique_size = 0;           // 0 selects the default
};

// Random delta-regular G on k vertices joined to a clique by one edge from
// each of vertices 0..t-1 of G, t = k (ratio - delta/2) + 1. Throws
// InvalidArgument on bad parameters and BudgetExceeded if no sample passes.
Construction build_high_delta(unsigned delta, const Rational& ratio, std::size_t k, std::uint64_t seed,
                              const HighDeltaOptions& opts = {});

// H (square of a 7-cycle plus the chord {0,3}) on 0..6, then the small clique,
// then the big clique; the first two small-clique vertices each get one edge
// to distinct big-clique vertices. Throws InvalidArgument if big < small or
// small < 2.
Construction counterexample_15_7(std::size_t clique_small = 7, std::size_t clique_big = 100);

// G_i: the clique on small + big vertices followed by i copies of the square
// of a 7-cycle, copy j joined by one edge from its vertex 0 to clique vertex
// j mod (small + big).
Graph counterexample_host(std::size_t i, std::size_t clique_small = 7, std::size_t clique_big = 100);
Rational counterexample_density(std::size_t i, std::size_t clique_small = 7, std::size_t clique_big = 100);
// Limit of the density as i grows: ratio of the per-copy edge and vertex counts.
Rational counterexample_limit();

}  // namespace wsat
