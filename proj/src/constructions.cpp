#include "wsat/constructions.hpp"

#include <random>

#include "wsat/errors.hpp"
#include "wsat/expander.hpp"
#include "wsat/graph_io.hpp"

namespace wsat {

namespace {

std::size_t to_size(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p()) throw InvalidArgument("value out of range: " + z.get_str());
  return z.get_ui();
}

Rational canonical(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c;
}

bool in_range(const Rational& r, const Rational& lo, const Rational& hi) { return r >= lo && r < hi; }

void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t size) {
  for (Vertex a = first; a < first + size; ++a)
    for (Vertex b = a + 1; b < first + size; ++b) edges.push_back({a, b});
}

}  // namespace

nlohmann::json ConstructionParams::to_json() const {
  return {{"delta", delta}, {"ratio", to_string(ratio)}, {"k", k}, {"p", p}, {"t", t}, {"clique_size", clique_size}};
}

std::size_t default_clique_size(unsigned delta, std::size_t g_order) { return 3 * g_order + delta + 2; }

ConstructionParams solve_params(unsigned delta, const Rational& ratio_in, std::size_t k_min) {
  const Rational r = canonical(ratio_in);
  const mpz_class a = r.get_num();
  const mpz_class b = r.get_den();
  ConstructionParams out;
  out.delta = delta;
  out.ratio = r;

  if (delta == 3) {
    if (!in_range(r, Rational(3, 2), Rational(2))) throw InvalidArgument("delta 3 needs ratio in [3/2, 2)");
    std::size_t p = 1;
    while (!in_range(r, make_rational(6 * p - 3, 3 * p - 1), make_rational(6 * p + 3, 3 * p + 2))) ++p;
    const mpz_class mod = 4 * b - 2 * a;
    const mpz_class num_coef = (3 * static_cast<long>(p) - 1) * a - (6 * static_cast<long>(p) - 3) * b;
    for (std::size_t k = std::max<std::size_t>(k_min, 4);; ++k) {
      if (k % 2 || mpz_class(k + 2) % mod != 0) continue;
      const mpz_class num = num_coef * static_cast<unsigned long>(k) + 2 * b;
      if (num % mod != 0) continue;
      const mpz_class t = num / mod;
      if (t < 0 || t > 3 * k / 2) continue;
      out.k = k;
      out.p = p;
      out.t = to_size(t);
      out.clique_size = default_clique_size(3, k * (3 * p - 1) / 2 + out.t);
      return out;
    }
  }
  if (delta == 4) {
    if (!in_range(r, Rational(2), Rational(3))) throw InvalidArgument("delta 4 needs ratio in [2, 3)");
    std::size_t p = 1;
    while (!in_range(r, make_rational(6 * p - 4, 2 * p - 1), make_rational(6 * p + 2, 2 * p + 1))) ++p;
    const mpz_class mod = 3 * b - a;
    const mpz_class num_coef = (2 * static_cast<long>(p) - 1) * a - (6 * static_cast<long>(p) - 4) * b;
    for (std::size_t k = std::max<std::size_t>(k_min, 5);; ++k) {
      if (k % 2 == 0 || mpz_class(k + 1) % mod != 0) continue;
      const mpz_class num = num_coef * static_cast<unsigned long>(k) + b;
      if (num % mod != 0) continue;
      const mpz_class t = num / mod;
      if (t < 0 || t > 2 * k) continue;
      out.k = k;
      out.p = p;
      out.t = to_size(t);
      out.clique_size = default_clique_size(4, k * (2 * p - 1) + out.t);
      return out;
    }
  }
  throw InvalidArgument("solve_params handles delta 3 and 4 only");
}

Graph sparse_family(unsigned delta, std::size_t k) {
  if (delta < 2) throw InvalidArgument("sparse family needs delta >= 2");
  if (k <= delta) throw InvalidArgument("sparse family needs k > delta");
  if (delta % 2 && k % 2) throw InvalidArgument("odd delta needs even k");
  std::vector<long> gens;
  for (long s = 1; s <= static_cast<long>(delta / 2); ++s) gens.push_back(s);
  if (delta % 2) gens.push_back(static_cast<long>(k / 2));
  return circulant(k, gens);
}

std::vector<std::size_t> spread_indices(std::size_t total, std::size_t count) {
  if (count > total) throw InvalidArgument("cannot spread more items than slots");
  std::vector<std::size_t> out;
  std::vector<char> used(total, 0);
  for (std::size_t i = 0; i < count; ++i) {
    // floor(i * total / count + 1/2)
    std::size_t idx = (2 * i * total + count) / (2 * count) % total;
    while (used[idx]) idx = (idx + 1) % total;
    used[idx] = 1;
    out.push_back(idx);
  }
  return out;
}

nlohmann::json Construction::metadata() const {
  nlohmann::json j = {{"family", family},
                      {"params", params.to_json()},
                      {"witness_set", witness_set},
                      {"predicted_gamma", to_string(predicted_gamma)},
                      {"graph", to_graph6(graph)}};
  if (predicted_limit) j["predicted_limit"] = to_string(*predicted_limit);
  if (seed) j["seed"] = *seed;
  return j;
}

namespace {

// Subdivides `g` (p or p + 1 edges per base edge), then attaches `per_vertex`
// pendant edges from every internal vertex to fresh clique vertices.
Construction subdivided_family(const std::string& family, const ConstructionParams& params, const Graph& g,
                               const std::vector<Edge>& longer, unsigned per_vertex) {
  std::map<Edge, std::size_t> schedule;
  for (const auto& e : g.edges()) schedule[e] = params.p;
  for (const auto& e : longer) schedule.at(e) = params.p + 1;
  auto sub = subdivide(g, schedule);
  const std::size_t n_sub = sub.graph.order();
  const std::size_t internal = n_sub - g.order();
  const std::size_t clique = params.clique_size ? params.clique_size : default_clique_size(params.delta, n_sub);
  if (clique < per_vertex * internal) throw InvalidArgument("clique too small for distinct attachment vertices");

  std::vector<Edge> edges = sub.graph.edges();
  add_clique(edges, static_cast<Vertex>(n_sub), clique);
  for (std::size_t j = 0; j < internal; ++j)
    for (unsigned c = 0; c < per_vertex; ++c)
      edges.push_back({static_cast<Vertex>(g.order() + j), static_cast<Vertex>(n_sub + per_vertex * j + c)});

  Construction out;
  out.family = family;
  out.params = params;
  out.params.clique_size = clique;
  out.graph = Graph(n_sub + clique, std::move(edges));
  for (Vertex v = 0; v < n_sub; ++v) out.witness_set.push_back(v);
  out.long_paths = longer;
  std::sort(out.long_paths.begin(), out.long_paths.end());
  return out;
}

void check_common(const ConstructionParams& params, unsigned delta) {
  if (params.delta != delta) throw InvalidArgument("params are for a different delta");
  if (params.p < 1) throw InvalidArgument("p must be at least 1");
}

}  // namespace

Construction build_delta3(const ConstructionParams& params) {
  check_common(params, 3);
  const std::size_t k = params.k;
  if (k < 4 || k % 2) throw InvalidArgument("delta 3 needs even k >= 4");
  if (params.t > 3 * k / 2) throw InvalidArgument("t must lie in [0, 3k/2]");
  const std::size_t half = k / 2;
  const Graph g = sparse_family(3, k);
  auto long_edge = [&](std::size_t i) { return make_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + half)); };
  auto outer_edge = [&](std::size_t i) { return make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)); };
  std::vector<Edge> longer;
  if (params.t <= half) {
    for (std::size_t i : spread_indices(half, params.t)) longer.push_back(long_edge(i));
  } else {
    for (std::size_t i = 0; i < half; ++i) longer.push_back(long_edge(i));
    for (std::size_t i : spread_indices(k, params.t - half)) longer.push_back(outer_edge(i));
  }
  auto out = subdivided_family("delta3", params, g, longer, 1);
  const long kk = static_cast<long>(k), p = static_cast<long>(params.p), t = static_cast<long>(params.t);
  // (k(3p - 3/2) + 2t - 1) / (k(3p/2 - 1/2) + t), doubled top and bottom
  out.predicted_gamma = make_rational(kk * (6 * p - 3) + 4 * t - 2, kk * (3 * p - 1) + 2 * t);
  return out;
}

Construction build_delta4(const ConstructionParams& params) {
  check_common(params, 4);
  const std::size_t k = params.k;
  if (k < 5 || k % 2 == 0) throw InvalidArgument("delta 4 needs odd k >= 5");
  if (params.t > 2 * k) throw InvalidArgument("t must lie in [0, 2k]");
  const Graph g = sparse_family(4, k);
  auto short_edge = [&](std::size_t i) { return make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)); };
  auto long_edge = [&](std::size_t i) { return make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 2) % k)); };
  std::vector<Edge> longer;
  if (params.t <= k) {
    for (std::size_t i : spread_indices(k, params.t)) longer.push_back(short_edge(i));
  } else {
    for (std::size_t i = 0; i < k; ++i) longer.push_back(short_edge(i));
    for (std::size_t i : spread_indices(k, params.t - k)) longer.push_back(long_edge(i));
  }
  auto out = subdivided_family("delta4", params, g, longer, 2);
  const long kk = static_cast<long>(k), p = static_cast<long>(params.p), t = static_cast<long>(params.t);
  out.predicted_gamma = make_rational(kk * (6 * p - 4) + 3 * t - 1, kk * (2 * p - 1) + t);
  return out;
}

Construction build_high_delta(unsigned delta, const Rational& ratio_in, std::size_t k, std::uint64_t seed,
                              const HighDeltaOptions& opts) {
  const Rational ratio = canonical(ratio_in);
  if (delta < 6) throw InvalidArgument("high-delta family needs delta >= 6");
  const Rational half_delta = make_rational(delta, 2);
  if (ratio < half_delta || ratio > half_delta + Rational(1, 2))
    throw InvalidArgument("ratio must lie in [delta/2, delta/2 + 1/2]");
  if (k % 2 || k == 0 || mpz_class(static_cast<unsigned long>(k)) % ratio.get_den() != 0)
    throw InvalidArgument("k must be an even multiple of the ratio's denominator");
  if (k <= delta) throw InvalidArgument("k must exceed delta");
  if (opts.expander_check && k > kIAlphaCap) throw InvalidArgument("expander check needs k <= " + std::to_string(kIAlphaCap));
  const Rational t_q = static_cast<long>(k) * (ratio - half_delta) + 1;
  const std::size_t t = to_size(t_q.get_num());

  std::mt19937_64 rng(seed);
  std::size_t remaining = opts.max_attempts;
  std::optional<Graph> g;
  while (!g) {
    if (remaining == 0) throw BudgetExceeded("no sample passed the expander check");
    std::size_t used = 0;
    Graph cand = sample_regular_graph(delta, k, rng, remaining, &used);
    remaining -= used;
    bool ok = true;
    if (opts.expander_check) {
      for (const Rational& alpha : {Rational(1, 10), Rational(1, 2), make_rational(t, k)}) {
        if (alpha * static_cast<long>(k) < 1) continue;
        if (!(i_alpha_exact(cand, alpha).value > Rational(201, 100) * (1 - alpha))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) g = std::move(cand);
  }

  const std::size_t clique = opts.clique_size ? opts.clique_size : default_clique_size(delta, k);
  if (clique < t) throw InvalidArgument("clique too small for distinct attachment vertices");
  std::vector<Edge> edges = g->edges();
  add_clique(edges, static_cast<Vertex>(k), clique);
  for (std::size_t i = 0; i < t; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(k + i)});

  Construction out;
  out.family = "high-delta";
  out.params = {delta, ratio, k, 0, t, clique};
  out.graph = Graph(k + clique, std::move(edges));
  for (Vertex v = 0; v < k; ++v) out.witness_set.push_back(v);
  out.predicted_gamma = make_rational(static_cast<long>(delta * k / 2 + t - 1), static_cast<long>(k));
  out.seed = seed;
  return out;
}

namespace {

Graph h_graph() {
  const long gens[] = {1, 2};
  return circulant(7, gens).plus_edge({0, 3});
}

Graph square_of_c7() {
  const long gens[] = {1, 2};
  return circulant(7, gens);
}

}  // namespace

Construction counterexample_15_7(std::size_t clique_small, std::size_t clique_big) {
  if (clique_small < 2 || clique_big < clique_small) throw InvalidArgument("need 2 <= small clique <= big clique");
  const Graph h = h_graph();
  std::vector<Edge> edges = h.edges();
  const Vertex small0 = 7;
  const Vertex big0 = static_cast<Vertex>(7 + clique_small);
  add_clique(edges, small0, clique_small);
  add_clique(edges, big0, clique_big);
  edges.push_back({small0, big0});
  edges.push_back({small0 + 1, big0 + 1});

  Construction out;
  out.family = "counterexample";
  out.params = {static_cast<unsigned>(h.min_degree()), counterexample_limit(), 7, 0, 2, clique_big};
  out.graph = Graph(7 + clique_small + clique_big, std::move(edges));
  out.witness_set = {0, 1, 2, 3, 4, 5, 6};
  out.predicted_gamma = make_rational(static_cast<long>(h.size()) - 1, 7);
  out.predicted_limit = counterexample_limit();
  return out;
}

Graph counterexample_host(std::size_t i, std::size_t clique_small, std::size_t clique_big) {
  const std::size_t base = clique_small + clique_big;
  const Graph c = square_of_c7();
  std::vector<Edge> edges;
  add_clique(edges, 0, base);
  for (std::size_t j = 0; j < i; ++j) {
    const Vertex off = static_cast<Vertex>(base + 7 * j);
    for (const auto& e : c.edges()) edges.push_back({off + e.u, off + e.v});
    edges.push_back(make_edge(off, static_cast<Vertex>(j % base)));
  }
  return Graph(base + 7 * i, std::move(edges));
}

Rational counterexample_density(std::size_t i, std::size_t clique_small, std::size_t clique_big) {
  const long base = static_cast<long>(clique_small + clique_big);
  const long per_copy = static_cast<long>(square_of_c7().size()) + 1;
  return make_rational(base * (base - 1) / 2 + per_copy * static_cast<long>(i), base + 7 * static_cast<long>(i));
}

Rational counterexample_limit() { return make_rational(static_cast<long>(square_of_c7().size()) + 1, 7); }

}  // namespace wsat
