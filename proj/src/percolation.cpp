#include "wsat/percolation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wsat/errors.hpp"

namespace wsat {

Graph PercolationTrace::final_graph() const {
  std::vector<Edge> added;
  added.reserve(steps.size());
  for (const auto& s : steps) added.push_back(s.edge);
  return host.plus_edges(added);
}

bool PercolationTrace::reaches_complete() const {
  const std::size_t n = host.order();
  return host.size() + steps.size() == n * (n > 0 ? n - 1 : 0) / 2;
}

PercolationTrace closure(const Graph& host, const CopyFinder& finder, ClosureOptions opts) {
  PercolationTrace trace{host, finder.pattern(), {}};
  if (finder.pattern().size() == 0) return trace;
  HostAdjacency state(host);
  const auto n = static_cast<Vertex>(host.order());
  bool added = true;
  while (added) {
    added = false;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (state.adjacent(a, b)) continue;
        const Edge e{a, b};
        state.add_edge(e);
        if (auto emb = finder.find_with_edge(state, e, opts.per_query)) {
          trace.steps.push_back({e, std::move(*emb)});
          added = true;
        } else {
          state.remove_edge(e);
        }
      }
    }
  }
  return trace;
}

PercolationTrace closure(const Graph& host, const Graph& pattern, ClosureOptions opts) {
  return closure(host, CopyFinder(pattern), opts);
}

bool is_weakly_saturated(const Graph& host, const CopyFinder& finder, ClosureOptions opts) {
  return closure(host, finder, opts).reaches_complete();
}

bool is_weakly_saturated(const Graph& host, const Graph& pattern) {
  return is_weakly_saturated(host, CopyFinder(pattern));
}

bool validate_trace(const PercolationTrace& trace) {
  HostAdjacency state(trace.host);
  for (const auto& s : trace.steps) {
    if (s.edge.v >= state.order() || s.edge.u >= s.edge.v || state.adjacent(s.edge.u, s.edge.v)) return false;
    state.add_edge(s.edge);
    if (!is_valid_embedding(trace.pattern, state, s.witness, s.edge)) return false;
  }
  return true;
}

nlohmann::json trace_to_json(const PercolationTrace& trace) {
  auto out = nlohmann::json::array();
  for (const auto& s : trace.steps)
    out.push_back({{"edge", {s.edge.u, s.edge.v}}, {"witness", s.witness.map}});
  return out;
}

PercolationTrace trace_from_json(const nlohmann::json& j, const Graph& host, const Graph& pattern) {
  if (!j.is_array()) throw ParseError("trace must be a JSON array");
  PercolationTrace trace{host, pattern, {}};
  try {
    for (const auto& step : j) {
      const auto& e = step.at("edge");
      if (!e.is_array() || e.size() != 2) throw ParseError("trace edge must have two endpoints");
      PercolationStep s;
      s.edge = make_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
      s.witness.map = step.at("witness").get<std::vector<Vertex>>();
      trace.steps.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed trace: ") + ex.what());
  }
  return trace;
}

ActivationPartition activation_partition(const PercolationTrace& trace) {
  if (!trace.reaches_complete())
    throw ActivationError(ActivationError::Kind::incomplete_trace, "trace does not reach the complete graph");
  const Graph& host = trace.host;
  ActivationPartition ap;
  ap.host = host;
  ap.part_of.assign(host.order(), -1);
  std::vector<Edge> activating;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    ActivationPart part;
    for (Vertex v : step.witness.map)
      if (ap.part_of[v] < 0) part.vertices.push_back(v);
    if (part.vertices.empty()) continue;
    std::sort(part.vertices.begin(), part.vertices.end());
    const int id = static_cast<int>(ap.parts.size());
    for (Vertex v : part.vertices) ap.part_of[v] = id;
    auto in_part = [&](Vertex v) { return ap.part_of[v] == id; };
    for (const auto& e : image_edges(trace.pattern, step.witness))
      if (host.has_edge(e) && (in_part(e.u) || in_part(e.v))) part.owned.push_back(e);
    part.activating_edge = step.edge;
    part.step = i;
    part.owns_activating_edge = in_part(step.edge.u) || in_part(step.edge.v);
    if (part.owns_activating_edge) part.owned.push_back(step.edge);
    std::sort(part.owned.begin(), part.owned.end());
    activating.push_back(step.edge);
    ap.parts.push_back(std::move(part));
  }
  for (Vertex v = 0; v < host.order(); ++v)
    if (ap.part_of[v] < 0)
      throw ActivationError(ActivationError::Kind::unactivated_vertex,
                            "vertex " + std::to_string(v) + " is never activated", v);
  ap.g_hat = host.plus_edges(activating);
  std::vector<Edge> owned_all;
  for (const auto& p : ap.parts) owned_all.insert(owned_all.end(), p.owned.begin(), p.owned.end());
  std::sort(owned_all.begin(), owned_all.end());
  std::set_difference(ap.g_hat.edges().begin(), ap.g_hat.edges().end(), owned_all.begin(), owned_all.end(),
                      std::back_inserter(ap.free_edges));
  return ap;
}

std::uint64_t count_a_matchings(const ActivationPartition& ap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ap.parts.size(); ++i) {
    const std::uint64_t k = ap.parts[i].owned.size();
    if (k == 0) throw InvalidArgument("part " + std::to_string(i) + " owns no edge");
    total = total > std::numeric_limits<std::uint64_t>::max() / k ? std::numeric_limits<std::uint64_t>::max()
                                                                   : total * k;
  }
  return total;
}

void enumerate_a_matchings(const ActivationPartition& ap, const std::function<bool(const AMatching&)>& visit) {
  count_a_matchings(ap);
  const std::size_t k = ap.parts.size();
  std::vector<std::size_t> digit(k, 0);
  AMatching m(k);
  for (std::size_t i = 0; i < k; ++i) m[i] = ap.parts[i].owned[0];
  while (true) {
    if (!visit(m)) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digit[i] < ap.parts[i].owned.size()) {
        m[i] = ap.parts[i].owned[digit[i]];
        break;
      }
      digit[i] = 0;
      m[i] = ap.parts[i].owned[0];
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

AMatching a_matching_at(const ActivationPartition& ap, std::uint64_t index) {
  if (index >= count_a_matchings(ap)) throw InvalidArgument("matching index out of range");
  AMatching m(ap.parts.size());
  for (std::size_t i = ap.parts.size(); i-- > 0;) {
    const auto k = ap.parts[i].owned.size();
    m[i] = ap.parts[i].owned[index % k];
    index /= k;
  }
  return m;
}

Graph rotate(const ActivationPartition& ap, const AMatching& m) {
  if (m.size() != ap.parts.size()) throw InvalidArgument("matching must pick one edge per part");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::binary_search(ap.parts[i].owned.begin(), ap.parts[i].owned.end(), m[i]))
      throw InvalidArgument("matching edge is not owned by its part");
  return ap.g_hat.minus_edges(m);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<std::size_t>> rotation_components(const ActivationPartition& ap,
                                                          std::uint64_t max_matchings) {
  const std::size_t k = ap.parts.size();
  const std::uint64_t total = count_a_matchings(ap);
  if (total > max_matchings)
    throw BudgetExceeded("rotation_components needs " + std::to_string(total) + " matchings, budget " +
                         std::to_string(max_matchings));
  const auto& edges = ap.g_hat.edges();
  std::vector<std::pair<std::size_t, std::size_t>> contracted(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    contracted[i] = {static_cast<std::size_t>(ap.part_of[edges[i].u]),
                     static_cast<std::size_t>(ap.part_of[edges[i].v])};
  // Owned edges of each part as indices into g_hat's edge list.
  std::vector<std::vector<std::size_t>> owned_idx(k);
  for (std::size_t p = 0; p < k; ++p)
    for (const auto& e : ap.parts[p].owned)
      owned_idx[p].push_back(static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin()));

  std::vector<std::size_t> cls(k, 0);
  std::vector<char> removed(edges.size(), 0);
  std::vector<std::size_t> digit(k, 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    for (std::size_t p = 0; p < k; ++p) removed[owned_idx[p][digit[p]]] = 1;
    UnionFind uf(k);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!removed[i]) uf.unite(contracted[i].first, contracted[i].second);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> relabel;
    for (std::size_t p = 0; p < k; ++p) {
      auto key = std::pair{cls[p], uf.find(p)};
      auto [pos, fresh] = relabel.try_emplace(key, relabel.size());
      cls[p] = pos->second;
    }
    for (std::size_t p = 0; p < k; ++p) removed[owned_idx[p][digit[p]]] = 0;
    if (relabel.size() == k) break;
    for (std::size_t p = k; p-- > 0;) {
      if (++digit[p] < owned_idx[p].size()) break;
      digit[p] = 0;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < k; ++p) groups[cls[p]].push_back(p);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [c, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Rational part_density(std::size_t part_size, std::size_t owned_edges) {
  if (part_size == 0) throw InvalidArgument("part must be nonempty");
  return make_rational(static_cast<long>(owned_edges), static_cast<long>(part_size));
}

}  // namespace wsat
