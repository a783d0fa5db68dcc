#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wsat/graph.hpp"
#include "wsat/interval.hpp"
#include "wsat/rational.hpp"

namespace wsat {

// L(alpha, r) = (alpha^-alpha (1-alpha)^-(1-alpha))^(1/r), evaluated via its log.
Interval condition_lhs(const Rational& alpha, unsigned r);

// R(alpha, eta) from the same inequality, with 0^0 = 1 at eta = 1. All
// coefficients are exact rationals; only the logarithms and products round.
Interval condition_rhs(const Rational& alpha, const Rational& eta);

struct ConditionValue {
  Interval lhs;
  Interval rhs;
  Interval margin;  // rhs - lhs
  bool holds() const { return margin.certainly_positive(); }
};

// Throws InvalidArgument unless r >= 3, 0 < alpha <= 1/2 and 0 <= eta <= 1.
ConditionValue condition_value(const Rational& alpha, unsigned r, const Rational& eta);

struct EtaResult {
  Rational eta;        // certified: the inequality holds here
  Rational expansion;  // (1 - eta) r (1 - alpha), exact
  Rational failing_eta;  // the inequality is not certified here; eta - failing_eta < tol
};

// Smallest eta, to within `tol`, at which the inequality is certified. A grid
// of `grid` steps brackets the first certified point and bisection narrows it.
// Throws InvalidArgument when no eta in [0, 1] is certified.
EtaResult best_eta(const Rational& alpha, unsigned r, double tol = 1e-12, unsigned grid = 1000);

struct TableRow {
  Rational alpha_lo;  // 0 means the open end of (0, alpha_hi]
  Rational alpha_hi;
  Rational bound;
};

// The twelve rows for r = 6, as printed (bounds rounded down).
std::vector<TableRow> expansion_table();

struct TableRowResult {
  TableRow row;
  double computed = 0;       // certified lower bound on the expansion at alpha_hi
  bool expansion_ok = false; // computed >= bound, certified
  bool bound_ok = false;     // bound >= 2.01 (1 - alpha_lo), exact
  bool pass() const { return expansion_ok && bound_ok; }
};

struct TableReport {
  std::vector<TableRowResult> rows;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

// Rows are evaluated in parallel; each row is independent.
TableReport verify_table(unsigned r, const std::vector<TableRow>& rows);
TableReport verify_table(unsigned r = 6);

namespace serial {
TableReport verify_table(unsigned r, const std::vector<TableRow>& rows);
}  // namespace serial

// Uniform integer in [0, bound) by rejection on 64-bit draws; fixed across
// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

struct ConfigurationSample {
  // Half-edge pairs; half-edge h belongs to vertex h / r.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing;
  std::optional<Graph> graph;  // the projection, when it is simple
};

// Uniform perfect matching of r*n half-edges (Fisher-Yates, then consecutive
// pairs). Throws InvalidArgument when r*n is odd.
ConfigurationSample sample_configuration(unsigned r, std::size_t n, std::mt19937_64& rng);
ConfigurationSample sample_configuration(unsigned r, std::size_t n, std::uint64_t seed);

// First simple projection from one seeded stream; throws BudgetExceeded after
// `max_attempts` rejections. `attempts` receives the number of pairings drawn.
Graph sample_regular_graph(unsigned r, std::size_t n, std::mt19937_64& rng, std::size_t max_attempts = 1'000'000,
                           std::size_t* attempts = nullptr);

inline constexpr std::size_t kIAlphaCap = 26;

struct IAlphaResult {
  Rational value;
  std::vector<Vertex> witness;
  std::uint64_t subsets = 0;
};

// Exact min of x(S)/|S| over nonempty S with |S| <= alpha |V|, where x(S)
// counts edges leaving S. Ties: smaller |S|, then lexicographically smaller S.
// Branches on the smallest member of S run in parallel.
IAlphaResult i_alpha_exact(const Graph& g, const Rational& alpha, std::size_t cap = kIAlphaCap);

namespace serial {
IAlphaResult i_alpha_exact(const Graph& g, const Rational& alpha, std::size_t cap = kIAlphaCap);
}  // namespace serial

// Edges with exactly one end in s.
std::size_t boundary_size(const Graph& g, const std::vector<Vertex>& s);

}  // namespace wsat
