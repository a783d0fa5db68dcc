#include "wsat/canonical.hpp"

#include <algorithm>
#include <map>

#include "wsat/errors.hpp"

namespace wsat {

namespace {

// Label-invariant ordered cells from colour refinement started at degrees.
std::vector<int> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<int>(g.degree(v));
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> sig;
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      keys[v] = {colour[v], std::move(around)};
      sig.emplace(keys[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : sig) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = sig[keys[v]];
    if (sig.size() == classes) return colour;
    classes = sig.size();
  }
}

struct Search {
  std::size_t n = 0;
  std::size_t total_bits = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::vector<Vertex>> slot_cells;  // allowed vertices per position
  std::vector<Vertex> perm;
  std::uint32_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  void run(std::size_t pos, std::uint64_t code) {
    if (pos == n) {
      if (!have_best || code < best) best = code, have_best = true;
      return;
    }
    const std::size_t bits_after = pos * (pos + 1) / 2;
    for (Vertex v : slot_cells[pos]) {
      if (used >> v & 1) continue;
      std::uint64_t c = code;
      for (std::size_t q = 0; q < pos; ++q) c = (c << 1) | ((adj[perm[q]] >> v) & 1);
      if (have_best && c > (best >> (total_bits - bits_after))) continue;
      perm[pos] = v;
      used |= 1u << v;
      run(pos + 1, c);
      used &= ~(1u << v);
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) throw InvalidArgument("canonical_code supports at most 11 vertices");
  if (n <= 1) return 0;
  auto colour = refine(g);
  Search s;
  s.n = n;
  s.total_bits = n * (n - 1) / 2;
  s.adj.assign(n, 0);
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= 1u << e.v;
    s.adj[e.v] |= 1u << e.u;
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
  s.slot_cells.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    for (Vertex v : order)
      if (colour[v] == colour[order[pos]]) s.slot_cells[pos].push_back(v);
  s.perm.assign(n, 0);
  s.run(0, 0);
  return s.best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kCanonicalMaxOrder) throw InvalidArgument("graph_from_code supports at most 11 vertices");
  std::vector<Edge> es;
  std::size_t bit = n * (n - 1) / 2;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (code >> --bit & 1) es.push_back({i, j});
  return Graph(n, es);
}

}  // namespace wsat
