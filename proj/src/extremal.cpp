#include "wsat/extremal.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "wsat/canonical.hpp"
#include "wsat/embedding.hpp"
#include "wsat/errors.hpp"
#include "wsat/maxflow.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " outside the graph");
    if (in[v]) throw InvalidArgument("vertex " + std::to_string(v) + " repeated");
    in[v] = 1;
  }
  return in;
}

// Candidate in the brute-force search: value (m-1)/k compared by cross
// multiplication, then size, then lexicographic vertex list.
struct BruteBest {
  std::uint64_t mask = 0;
  std::int64_t num = 0;  // m - 1
  std::int64_t den = 0;  // |S|
  bool valid = false;
};

bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

bool better(const BruteBest& a, const BruteBest& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const auto l = a.num * b.den;
  const auto r = b.num * a.den;
  if (l != r) return l < r;
  if (a.den != b.den) return a.den < b.den;
  return lex_less(a.mask, b.mask);
}

GammaResult gamma_brute_impl(const Graph& g, std::size_t cap, bool parallel) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("gamma needs a nonempty vertex set");
  if (n > cap || n > 62) throw BudgetExceeded("gamma_min_brute: " + std::to_string(n) + " vertices exceed cap " +
                                              std::to_string(cap));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::int64_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));

  // Incumbent: the whole vertex set.
  BruteBest start{(std::uint64_t{1} << n) - 1, static_cast<std::int64_t>(g.size()) - 1,
                  static_cast<std::int64_t>(n), true};
  // Sizes whose best conceivable m (smallest degrees, densest inside) cannot
  // beat the incumbent are skipped.
  std::vector<std::int64_t> sorted_deg = deg;
  std::sort(sorted_deg.begin(), sorted_deg.end());
  std::vector<char> size_ok(n + 1, 0);
  std::int64_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += sorted_deg[k - 1];
    const std::int64_t inside = static_cast<std::int64_t>(k * (k - 1) / 2);
    const std::int64_t lb = std::max<std::int64_t>(prefix - inside, prefix / 2 + (prefix % 2));
    size_ok[k] = (lb - 1) * start.den <= start.num * static_cast<std::int64_t>(k);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  BruteBest best = start;
  std::uint64_t visited = 0;
#pragma omp parallel if (parallel)
  {
    BruteBest local;
    std::uint64_t local_visited = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t raw = 1; raw < static_cast<std::int64_t>(total); ++raw) {
      const auto mask = static_cast<std::uint64_t>(raw);
      const auto k = static_cast<std::size_t>(std::popcount(mask));
      if (!size_ok[k]) continue;
      ++local_visited;
      std::int64_t sum = 0;
      std::int64_t twice_inside = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        sum += deg[v];
        twice_inside += std::popcount(adj[v] & mask);
      }
      BruteBest cand{mask, sum - twice_inside / 2 - 1, static_cast<std::int64_t>(k), true};
      if (better(cand, local)) local = cand;
    }
#pragma omp critical
    {
      visited += local_visited;
      if (better(local, best)) best = local;
    }
  }
  GammaResult r;
  r.value = make_rational(best.num, best.den);
  for (Vertex v = 0; v < n; ++v)
    if (best.mask >> v & 1) r.witness.push_back(v);
  r.method = GammaMethod::brute;
  r.nodes_explored = visited;
  return r;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("rational too large for min-cut capacities");
  return z.get_si();
}

// Maximizes q e(T) - p |T| over T; `forced` (if any) is kept out of T.
// Returns membership of T.
std::vector<char> best_closure(const Graph& g, std::int64_t p, std::int64_t q, std::optional<Vertex> forced) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const std::size_t s = 0, t = 1, edge0 = 2, vert0 = 2 + m;
  MaxFlow flow(2 + m + n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = g.edges()[i];
    flow.add_edge(s, edge0 + i, q);
    flow.add_edge(edge0 + i, vert0 + e.u, MaxFlow::kInfinite);
    flow.add_edge(edge0 + i, vert0 + e.v, MaxFlow::kInfinite);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (forced && *forced == v)
      flow.add_edge(vert0 + v, t, MaxFlow::kInfinite);
    else if (p >= 0)
      flow.add_edge(vert0 + v, t, p);
    else
      flow.add_edge(s, vert0 + v, -p);
  }
  flow.run(s, t);
  auto side = flow.source_side(s);
  std::vector<char> in_t(n);
  for (Vertex v = 0; v < n; ++v) in_t[v] = side[vert0 + v];
  return in_t;
}

std::pair<Rational, std::vector<Vertex>> deficit_impl(const Graph& g, const Rational& lambda, bool parallel,
                                                      std::uint64_t* solves) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("gamma needs a nonempty vertex set");
  Rational lam = lambda;
  lam.canonicalize();
  const std::int64_t p = to_i64(lam.get_num());
  const std::int64_t q = to_i64(lam.get_den());

  auto evaluate = [&](const std::vector<char>& in_t) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (!in_t[v]) s.push_back(v);
    Rational val = s.empty() ? Rational(0) : Rational(static_cast<long>(m_f(g, s)) - 1) - lam * static_cast<long>(s.size());
    return std::pair{val, s};
  };

  auto free_t = best_closure(g, p, q, std::nullopt);
  if (solves) ++*solves;
  if (std::find(free_t.begin(), free_t.end(), 0) != free_t.end()) return evaluate(free_t);

  std::vector<std::pair<Rational, std::vector<Vertex>>> per(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v)
    per[v] = evaluate(best_closure(g, p, q, static_cast<Vertex>(v)));
  if (solves) *solves += n;
  std::size_t pick = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (per[v].first < per[pick].first) pick = v;
  return per[pick];
}

GammaResult gamma_ratio_impl(const Graph& g, bool parallel) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("gamma needs a nonempty vertex set");
  std::vector<Vertex> s(n);
  std::iota(s.begin(), s.end(), 0);
  Rational lambda = gamma_of(g, s);
  std::uint64_t solves = 0;
  while (true) {
    auto [d, cand] = deficit_impl(g, lambda, parallel, &solves);
    if (d >= 0) break;
    s = std::move(cand);
    lambda = gamma_of(g, s);
  }
  return {lambda, s, GammaMethod::ratio, solves};
}

}  // namespace

std::size_t m_f(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (in[e.u] || in[e.v]) ++count;
  return count;
}

Rational gamma_of(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InvalidArgument("gamma needs a nonempty set");
  return make_rational(static_cast<long>(m_f(g, s)) - 1, static_cast<long>(s.size()));
}

std::string to_string(GammaMethod m) { return m == GammaMethod::brute ? "brute" : "ratio"; }

GammaResult gamma_min_brute(const Graph& g, std::size_t cap) { return gamma_brute_impl(g, cap, true); }

GammaResult gamma_min_ratio(const Graph& g) { return gamma_ratio_impl(g, true); }

std::pair<Rational, std::vector<Vertex>> gamma_deficit(const Graph& g, const Rational& lambda) {
  return deficit_impl(g, lambda, true, nullptr);
}

namespace serial {

GammaResult gamma_min_brute(const Graph& g, std::size_t cap) { return gamma_brute_impl(g, cap, false); }

std::pair<Rational, std::vector<Vertex>> gamma_deficit(const Graph& g, const Rational& lambda) {
  return deficit_impl(g, lambda, false, nullptr);
}

}  // namespace serial

Graph build_f_tilde(const Graph& f, std::size_t clique_pad, bool dedup, std::size_t cap) {
  const std::vector<Graph> pieces{f, complete_graph(clique_pad)};
  const Graph base = disjoint_union(pieces);
  const auto missing = base.non_edges();
  if (missing.size() > cap || missing.size() >= 63)
    throw BudgetExceeded("F-tilde needs 2^" + std::to_string(missing.size()) + " supergraphs, cap is 2^" +
                         std::to_string(cap));
  std::vector<Graph> parts;
  std::vector<std::uint64_t> codes;
  const bool small = base.order() <= kCanonicalMaxOrder;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << missing.size()); ++mask) {
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (mask >> i & 1) extra.push_back(missing[i]);
    Graph super = base.plus_edges(extra);
    if (dedup) {
      bool seen = false;
      if (small) {
        const auto code = canonical_code(super);
        seen = std::find(codes.begin(), codes.end(), code) != codes.end();
        if (!seen) codes.push_back(code);
      } else {
        for (const auto& p : parts)
          if (p.size() == super.size() && are_isomorphic(p, super)) {
            seen = true;
            break;
          }
      }
      if (seen) continue;
    }
    parts.push_back(std::move(super));
  }
  return disjoint_union(parts);
}

Graph ftilde_host_sequence(const Graph& f, std::span<const Vertex> s, std::size_t i) {
  auto in = membership(f, s);
  if (s.empty()) throw InvalidArgument("S must be nonempty");
  if (gamma_of(f, s) != gamma_min_ratio(f).value) throw InvalidArgument("S does not minimize gamma");
  std::optional<Edge> e_star;
  for (const auto& e : f.edges())
    if (in[e.u] || in[e.v]) {
      e_star = e;
      break;
    }
  if (!e_star) throw InvalidArgument("no edge of F meets S");
  bool has_f0 = false;
  for (Vertex v = 0; v < f.order() && !has_f0; ++v) {
    if (in[v]) continue;
    bool touches = false;
    for (Vertex w : f.neighbors(v)) touches = touches || in[w];
    has_f0 = !touches;
  }
  if (!has_f0) throw InvalidArgument("every vertex outside S has a neighbour in S; pad F with a clique");

  const std::size_t missing = f.non_edges().size();
  if (missing > kFTildeCap) throw BudgetExceeded("F-tilde too large for the G_i construction");
  const std::size_t k = f.order() * (std::size_t{1} << missing) + 1;

  std::vector<Vertex> s_sorted(s.begin(), s.end());
  std::sort(s_sorted.begin(), s_sorted.end());
  std::vector<Vertex> local(f.order());  // position inside U or inside a block
  Vertex u_next = 0;
  for (Vertex v = 0; v < f.order(); ++v)
    if (!in[v]) local[v] = u_next++;
  for (std::size_t j = 0; j < s_sorted.size(); ++j) local[s_sorted[j]] = static_cast<Vertex>(j);

  const std::size_t n = k + i * s_sorted.size();
  std::vector<Edge> es = complete_graph(k).edges();
  for (std::size_t b = 0; b < i; ++b) {
    const auto base = static_cast<Vertex>(k + b * s_sorted.size());
    auto place = [&](Vertex v) { return in[v] ? base + local[v] : local[v]; };
    for (const auto& e : f.edges()) {
      if (e == *e_star || !(in[e.u] || in[e.v])) continue;
      es.push_back(make_edge(place(e.u), place(e.v)));
    }
  }
  return Graph(n, es);
}

namespace {

WsatResult wsat_impl(std::size_t n, const Graph& f, std::uint64_t budget, bool parallel) {
  if (n > kCanonicalMaxOrder) throw InvalidArgument("wsat_exact supports hosts of at most 11 vertices");
  WsatResult r;
  r.n = n;
  const std::size_t all = n * (n > 0 ? n - 1 : 0) / 2;
  r.upper_bound = all;
  const std::size_t delta = f.order() ? f.min_degree() : 0;
  const std::size_t need = n ? std::min(delta > 0 ? delta - 1 : 0, n - 1) : 0;
  const std::size_t m_lo = (n * need + 1) / 2;
  r.lower_bound = m_lo;

  const CopyFinder finder(f);
  auto degree_ok = [&](const Graph& g) {
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) < need && g.degree(v) != n - 1) return false;
    return true;
  };

  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 0; m <= all; ++m) {
    if (m >= m_lo) {
      std::vector<Graph> hosts;
      for (auto code : level) {
        Graph g = graph_from_code(n, code);
        if (degree_ok(g)) hosts.push_back(std::move(g));
      }
      if (r.graphs_tested + hosts.size() > budget) {
        r.lower_bound = m;
        return r;
      }
      std::vector<char> sat(hosts.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
      for (std::int64_t h = 0; h < static_cast<std::int64_t>(hosts.size()); ++h)
        sat[h] = is_weakly_saturated(hosts[h], finder);
      r.graphs_tested += hosts.size();
      for (std::size_t h = 0; h < hosts.size(); ++h)
        if (sat[h]) r.all_witnesses.push_back(hosts[h]);
      if (!r.all_witnesses.empty()) {
        r.value = m;
        r.lower_bound = r.upper_bound = m;
        r.witness = r.all_witnesses.front();
        return r;
      }
    }
    if (m == all) break;
    std::set<std::uint64_t> next;
    for (auto code : level) {
      Graph g = graph_from_code(n, code);
      for (const auto& e : g.non_edges()) next.insert(canonical_code(g.plus_edge(e)));
    }
    level.assign(next.begin(), next.end());
  }
  return r;
}

}  // namespace

WsatResult wsat_exact(std::size_t n, const Graph& f, std::uint64_t budget) { return wsat_impl(n, f, budget, true); }

namespace serial {
WsatResult wsat_exact(std::size_t n, const Graph& f, std::uint64_t budget) { return wsat_impl(n, f, budget, false); }
}  // namespace serial

Graph replicate_component(const Graph& g, std::span<const Vertex> p0, std::span<const Edge> owned, std::size_t i) {
  auto in = membership(g, p0);
  std::vector<Vertex> pos(g.order(), 0);
  for (std::size_t j = 0; j < p0.size(); ++j) pos[p0[j]] = static_cast<Vertex>(j);
  for (const auto& e : owned) {
    if (e.v >= g.order()) throw InvalidArgument("owned edge outside the graph");
    if (!in[e.u] && !in[e.v]) throw InvalidArgument("owned edge has no end in the part");
  }
  std::vector<Edge> es = g.edges();
  for (std::size_t c = 0; c < i; ++c) {
    const auto base = static_cast<Vertex>(g.order() + c * p0.size());
    auto place = [&](Vertex v) { return in[v] ? base + pos[v] : v; };
    for (const auto& e : owned) es.push_back(make_edge(place(e.u), place(e.v)));
  }
  return Graph(g.order() + i * p0.size(), es);
}

std::pair<Rational, Rational> w_f_bounds(const Graph& f) {
  const auto gamma = gamma_min_ratio(f).value;
  const long delta = static_cast<long>(f.min_degree());
  Rational lower = make_rational(delta, 2) - make_rational(1, delta + 1);
  if (gamma > lower) lower = gamma;
  return {lower, Rational(delta - 1)};
}

}  // namespace wsat
