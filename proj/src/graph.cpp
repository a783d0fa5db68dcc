#include "wsat/graph.hpp"

#include <algorithm>
#include <string>

#include "wsat/errors.hpp"

namespace wsat {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : n_(n), adj_(n), rows_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range for n=" + std::to_string(n));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidArgument("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::min_degree() const {
  std::size_t d = n_ == 0 ? 0 : n_;
  for (const auto& list : adj_) d = std::min(d, list.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adj_) d = std::max(d, list.size());
  return d;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!rows_[u].test(v)) out.push_back({u, v});
  return out;
}

Graph Graph::plus_edge(Edge e) const { return plus_edges(std::span<const Edge>(&e, 1)); }

Graph Graph::plus_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, std::move(all));
}

Graph Graph::minus_edges(std::span<const Edge> removed) const {
  std::set<Edge> drop;
  for (auto e : removed) {
    e = make_edge(e.u, e.v);
    if (!has_edge(e))
      throw InvalidArgument("cannot remove absent edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    drop.insert(e);
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_)
    if (!drop.contains(e)) kept.push_back(e);
  return Graph(n_, std::move(kept));
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(vertices.size(), std::move(es));
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  es.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  return Graph(n, std::move(es));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v - 1, v});
  es.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(es));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({0, v});
  return Graph(n, std::move(es));
}

Graph circulant(std::size_t k, std::span<const long> generators) {
  if (k < 3) throw InvalidArgument("circulant needs k >= 3");
  const long kk = static_cast<long>(k);
  std::set<Edge> es;
  for (long s : generators) {
    long r = ((s % kk) + kk) % kk;
    if (r == 0) throw InvalidArgument("generator " + std::to_string(s) + " is 0 mod " + std::to_string(k));
    for (long i = 0; i < kk; ++i) es.insert(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + r) % kk)));
  }
  return Graph(k, std::vector<Edge>(es.begin(), es.end()));
}

Subdivision subdivide(const Graph& g, const std::map<Edge, std::size_t>& schedule) {
  Subdivision out;
  std::vector<Edge> es;
  Vertex next = static_cast<Vertex>(g.order());
  for (const auto& e : g.edges()) {
    auto it = schedule.find(e);
    if (it == schedule.end())
      throw InvalidArgument("subdivision schedule misses edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (it->second == 0) throw InvalidArgument("subdivision path length must be >= 1");
    std::vector<Vertex> inner;
    Vertex prev = e.u;
    for (std::size_t i = 1; i < it->second; ++i) {
      inner.push_back(next);
      es.push_back(make_edge(prev, next));
      prev = next++;
    }
    es.push_back(make_edge(prev, e.v));
    out.original_edges.push_back(e);
    out.internal.push_back(std::move(inner));
  }
  out.graph = Graph(next, std::move(es));
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::vector<Edge> es;
  for (const auto& g : parts) {
    const auto off = static_cast<Vertex>(n);
    for (const auto& e : g.edges()) es.push_back({e.u + off, e.v + off});
    n += g.order();
  }
  return Graph(n, std::move(es));
}

}  // namespace wsat
