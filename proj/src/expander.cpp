#include "wsat/expander.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

#include "wsat/errors.hpp"

namespace wsat {

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha > Rational(1, 2)) throw InvalidArgument("alpha must lie in (0, 1/2]");
}

// x ln x for rational x in (0, 1].
Interval x_log_x(const Rational& x) { return Interval(x) * log(Interval(x)); }

}  // namespace

Interval condition_lhs(const Rational& alpha, unsigned r) {
  check_alpha(alpha);
  if (r < 3) throw InvalidArgument("r must be at least 3");
  const Rational beta = 1 - alpha;
  Interval s = x_log_x(alpha);
  if (beta != 1) s = s + x_log_x(beta);
  return exp(Interval(Rational(-1, r)) * s);
}

Interval condition_rhs(const Rational& alpha, const Rational& eta) {
  check_alpha(alpha);
  if (eta < 0 || eta > 1) throw InvalidArgument("eta must lie in [0, 1]");
  const Rational beta = 1 - alpha;
  Interval total(Rational(0));
  if (eta != 1 && eta != 0) {
    const Rational one_minus = 1 - eta;
    total = total + Interval(one_minus * alpha * beta) * log(Interval(one_minus));
  }
  total = total + Interval((alpha + beta * eta) * alpha / 2) * log(Interval(1 + beta * eta / alpha));
  total = total + Interval((beta + alpha * eta) * beta / 2) * log(Interval(1 + alpha * eta / beta));
  return exp(total);
}

ConditionValue condition_value(const Rational& alpha, unsigned r, const Rational& eta) {
  auto lhs = condition_lhs(alpha, r);
  auto rhs = condition_rhs(alpha, eta);
  auto margin = rhs - lhs;
  return {lhs, rhs, margin};
}

EtaResult best_eta(const Rational& alpha, unsigned r, double tol, unsigned grid) {
  if (!(tol > 0) || grid == 0) throw InvalidArgument("tolerance and grid must be positive");
  auto holds = [&](const Rational& eta) { return condition_value(alpha, r, eta).holds(); };
  std::optional<unsigned> first;
  for (unsigned j = 0; j <= grid; ++j)
    if (holds(Rational(j, grid))) {
      first = j;
      break;
    }
  if (!first) throw InvalidArgument("condition is not satisfied for any eta in [0, 1]");
  EtaResult res;
  if (*first == 0) {
    res.eta = 0;
    res.failing_eta = 0;
  } else {
    Rational lo(*first - 1, grid);
    Rational hi(*first, grid);
    lo.canonicalize();
    hi.canonicalize();
    const Rational t{tol};
    while (hi - lo >= t) {
      Rational mid = (lo + hi) / 2;
      if (holds(mid))
        hi = mid;
      else
        lo = mid;
    }
    res.eta = hi;
    res.failing_eta = lo;
  }
  res.expansion = (1 - res.eta) * r * (1 - alpha);
  return res;
}

std::vector<TableRow> expansion_table() {
  auto q = [](long p, long d) { return make_rational(p, d); };
  return {
      {q(481, 1000), q(1, 2), q(10437, 10000)},   {q(461, 1000), q(481, 1000), q(10836, 10000)},
      {q(44, 100), q(461, 1000), q(1126, 1000)},  {q(42, 100), q(44, 100), q(1171, 1000)},
      {q(4, 10), q(42, 100), q(1215, 1000)},      {q(375, 1000), q(4, 10), q(126, 100)},
      {q(345, 1000), q(375, 1000), q(1317, 1000)}, {q(31, 100), q(345, 1000), q(1389, 1000)},
      {q(266, 1000), q(31, 100), q(14756, 10000)}, {q(21, 100), q(266, 1000), q(1591, 1000)},
      {q(13, 100), q(21, 100), q(1753, 1000)},    {q(0, 1), q(13, 100), q(2033, 1000)},
  };
}

bool TableReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRowResult& r) { return r.pass(); });
}

nlohmann::json TableReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"alpha_lo", to_string(r.row.alpha_lo)},
                   {"alpha_hi", to_string(r.row.alpha_hi)},
                   {"table_bound", to_string(r.row.bound)},
                   {"computed", r.computed},
                   {"pass", r.pass()}});
  return {{"rows", arr}, {"all_pass", all_pass()}};
}

namespace {

TableRowResult check_row(unsigned r, const TableRow& row) {
  TableRowResult out;
  out.row = row;
  const auto eta = best_eta(row.alpha_hi, r);
  out.computed = eta.expansion.get_d();
  out.expansion_ok = eta.expansion >= row.bound;
  out.bound_ok = row.bound >= Rational(201, 100) * (1 - row.alpha_lo);
  return out;
}

TableReport table_impl(unsigned r, const std::vector<TableRow>& rows, bool parallel) {
  TableReport rep;
  rep.rows.resize(rows.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i) rep.rows[i] = check_row(r, rows[i]);
  return rep;
}

}  // namespace

TableReport verify_table(unsigned r, const std::vector<TableRow>& rows) { return table_impl(r, rows, true); }
TableReport verify_table(unsigned r) { return verify_table(r, expansion_table()); }

namespace serial {
TableReport verify_table(unsigned r, const std::vector<TableRow>& rows) { return table_impl(r, rows, false); }
}  // namespace serial

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

ConfigurationSample sample_configuration(unsigned r, std::size_t n, std::mt19937_64& rng) {
  if ((static_cast<std::uint64_t>(r) * n) % 2) throw InvalidArgument("r * n must be even");
  const std::size_t points = static_cast<std::size_t>(r) * n;
  std::vector<std::uint32_t> perm(points);
  for (std::size_t i = 0; i < points; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = points; i > 1; --i) std::swap(perm[i - 1], perm[bounded_draw(rng, i)]);
  ConfigurationSample s;
  bool simple = true;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < points; i += 2) {
    s.pairing.push_back({perm[i], perm[i + 1]});
    const Vertex a = perm[i] / r;
    const Vertex b = perm[i + 1] / r;
    if (a == b) {
      simple = false;
      continue;
    }
    edges.push_back(make_edge(a, b));
  }
  if (simple) {
    std::sort(edges.begin(), edges.end());
    simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
  }
  if (simple) s.graph = Graph(n, std::move(edges));
  return s;
}

ConfigurationSample sample_configuration(unsigned r, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_configuration(r, n, rng);
}

Graph sample_regular_graph(unsigned r, std::size_t n, std::mt19937_64& rng, std::size_t max_attempts,
                           std::size_t* attempts) {
  for (std::size_t a = 1; a <= max_attempts; ++a) {
    auto s = sample_configuration(r, n, rng);
    if (s.graph) {
      if (attempts) *attempts = a;
      return std::move(*s.graph);
    }
  }
  throw BudgetExceeded("no simple configuration in " + std::to_string(max_attempts) + " attempts");
}

namespace {

struct IAlphaBest {
  std::uint64_t mask = 0;
  std::int64_t x = 0;
  std::int64_t k = 0;
  bool valid = false;
};

bool ia_better(const IAlphaBest& a, const IAlphaBest& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  const auto l = a.x * b.k;
  const auto r = b.x * a.k;
  if (l != r) return l < r;
  if (a.k != b.k) return a.k < b.k;
  const std::uint64_t diff = a.mask ^ b.mask;
  return (a.mask & diff & (~diff + 1)) != 0;
}

struct IAlphaSearch {
  const std::vector<std::uint64_t>& adj;
  const std::vector<std::int64_t>& deg;
  std::size_t n;
  std::size_t max_size;
  IAlphaBest best;
  std::uint64_t visited = 0;

  // S currently `mask` with |S| = k and boundary x; extend with vertices >= next.
  void run(std::size_t next, std::uint64_t mask, std::int64_t k, std::int64_t x) {
    ++visited;
    IAlphaBest here{mask, x, k, true};
    if (ia_better(here, best)) best = here;
    if (static_cast<std::size_t>(k) == max_size) return;
    for (std::size_t v = next; v < n; ++v) {
      const std::int64_t inside = std::popcount(adj[v] & mask);
      run(v + 1, mask | (std::uint64_t{1} << v), k + 1, x + deg[v] - 2 * inside);
    }
  }
};

IAlphaResult i_alpha_impl(const Graph& g, const Rational& alpha, std::size_t cap, bool parallel) {
  const std::size_t n = g.order();
  if (n > cap || n > 63) throw BudgetExceeded("i_alpha_exact: " + std::to_string(n) + " vertices exceed cap " +
                                              std::to_string(cap));
  if (alpha <= 0) throw InvalidArgument("alpha must be positive");
  const Rational limit = alpha * static_cast<long>(n);
  const auto max_size = static_cast<std::size_t>(floor(limit).get_si());
  if (max_size == 0) throw InvalidArgument("no nonempty set has size at most alpha |V|");
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::int64_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));

  IAlphaBest best;
  std::uint64_t visited = 0;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
    IAlphaSearch s{adj, deg, n, max_size, {}, 0};
    s.run(static_cast<std::size_t>(first) + 1, std::uint64_t{1} << first, 1, deg[first]);
#pragma omp critical
    {
      visited += s.visited;
      if (ia_better(s.best, best)) best = s.best;
    }
  }
  IAlphaResult r;
  r.value = make_rational(best.x, best.k);
  for (Vertex v = 0; v < n; ++v)
    if (best.mask >> v & 1) r.witness.push_back(v);
  r.subsets = visited;
  return r;
}

}  // namespace

IAlphaResult i_alpha_exact(const Graph& g, const Rational& alpha, std::size_t cap) {
  return i_alpha_impl(g, alpha, cap, true);
}

namespace serial {
IAlphaResult i_alpha_exact(const Graph& g, const Rational& alpha, std::size_t cap) {
  return i_alpha_impl(g, alpha, cap, false);
}
}  // namespace serial

std::size_t boundary_size(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in.at(v) = 1;
  std::size_t x = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) ++x;
  return x;
}

}  // namespace wsat
