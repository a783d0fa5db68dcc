#include "wsat/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wsat/errors.hpp"

namespace wsat {

namespace {

constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

// Clears every bit with index <= x.
void clear_through(Bitset& b, std::size_t x) {
  std::uint64_t* w = b.data();
  const std::size_t full = (x + 1) >> 6;
  for (std::size_t i = 0; i < full && i < b.word_count(); ++i) w[i] = 0;
  if (full < b.word_count() && ((x + 1) & 63)) w[full] &= ~std::uint64_t{0} << ((x + 1) & 63);
}

// Clears every bit with index >= x.
void clear_from(Bitset& b, std::size_t x) {
  std::uint64_t* w = b.data();
  std::size_t wi = x >> 6;
  if (wi >= b.word_count()) return;
  w[wi] &= (x & 63) ? (std::uint64_t{1} << (x & 63)) - 1 : 0;
  for (++wi; wi < b.word_count(); ++wi) w[wi] = 0;
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

HostAdjacency::HostAdjacency(const Graph& g) : rows_(g.rows()), degrees_(g.order()) {
  for (Vertex v = 0; v < g.order(); ++v) degrees_[v] = static_cast<std::uint32_t>(g.degree(v));
}

void HostAdjacency::add_edge(Edge e) {
  if (rows_[e.u].test(e.v)) return;
  rows_[e.u].set(e.v);
  rows_[e.v].set(e.u);
  ++degrees_[e.u];
  ++degrees_[e.v];
}

void HostAdjacency::remove_edge(Edge e) {
  if (!rows_[e.u].test(e.v)) return;
  rows_[e.u].reset(e.v);
  rows_[e.v].reset(e.u);
  --degrees_[e.u];
  --degrees_[e.v];
}

CopyFinder::CopyFinder(const Graph& pattern) : pattern_(pattern) {
  const std::size_t n = pattern_.order();
  degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) degree_[v] = static_cast<std::uint32_t>(pattern_.degree(v));

  comps_ = pattern_.components();
  comp_of_.assign(n, -1);
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (Vertex v : comps_[c]) comp_of_[v] = static_cast<int>(c);

  // Isomorphism groups of components, labelled by their first member.
  comp_group_.assign(comps_.size(), -1);
  std::vector<Graph> comp_graphs;
  comp_graphs.reserve(comps_.size());
  for (const auto& c : comps_) comp_graphs.push_back(pattern_.induced(c));
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    for (std::size_t r = 0; r < c && comp_group_[c] < 0; ++r) {
      if (comp_group_[r] != static_cast<int>(r)) continue;
      if (comp_graphs[r].order() != comp_graphs[c].order() || comp_graphs[r].size() != comp_graphs[c].size())
        continue;
      if (sorted_degrees(comp_graphs[r]) != sorted_degrees(comp_graphs[c])) continue;
      if (comp_graphs[c].order() == 1 || find_embedding(comp_graphs[r], comp_graphs[c]))
        comp_group_[c] = static_cast<int>(r);
    }
    if (comp_group_[c] < 0) comp_group_[c] = static_cast<int>(c);
  }

  // Twin classes inside each component: equal closed neighbourhoods (true
  // twins) or equal open neighbourhoods (false twins).
  twin_class_.assign(n, -1);
  auto group_by = [&](bool closed) {
    std::map<std::pair<int, std::vector<std::uint64_t>>, std::vector<Vertex>> buckets;
    for (Vertex v = 0; v < n; ++v) {
      if (twin_class_[v] >= 0) continue;
      Bitset key = pattern_.row(v);
      if (closed) key.set(v);
      buckets[{comp_of_[v], std::vector<std::uint64_t>(key.data(), key.data() + key.word_count())}].push_back(v);
    }
    for (auto& [key, members] : buckets) {
      if (members.size() < 2) continue;
      for (Vertex v : members) twin_class_[v] = static_cast<int>(twin_members_.size());
      twin_members_.push_back(members);
    }
  };
  group_by(true);
  group_by(false);

  // Seeds: canonical representatives of ordered pattern edges.
  auto rep = [&](Vertex x, std::optional<Vertex> taken) -> Vertex {
    if (twin_class_[x] < 0) return x;
    for (Vertex m : twin_members_[twin_class_[x]])
      if (!taken || m != *taken) return m;
    return x;
  };
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : pattern_.edges()) {
    const int c = comp_of_[e.u];
    if (comp_group_[c] != c) continue;
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      Vertex cx = rep(x, std::nullopt);
      Vertex cy = (twin_class_[y] >= 0 && twin_class_[y] == twin_class_[x]) ? rep(y, cx) : rep(y, std::nullopt);
      if (seen.insert({cx, cy}).second) seeds_.push_back({cx, cy});
    }
  }

  std::set<std::uint32_t> ds(degree_.begin(), degree_.end());
  distinct_degrees_.assign(ds.begin(), ds.end());
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const CopyFinder& f, const HostAdjacency& h, SearchLimits limits, SearchStats* stats)
      : f_(f), h_(h), limits_(limits), stats_(stats ? stats : &local_stats_) {
    const std::size_t np = f_.pattern_.order();
    const std::size_t nh = h_.order();
    img_.assign(np, kUnmapped);
    used_ = Bitset(nh);
    seeded_.assign(np, 0);
    assigned_nbrs_.assign(np, 0);
    assigned_in_comp_.assign(f_.comps_.size(), 0);
    min_img_.assign(f_.comps_.size(), kUnmapped);
    deg_index_.resize(np);
    for (std::uint32_t d : f_.distinct_degrees_) {
      Bitset b(nh);
      for (Vertex v = 0; v < nh; ++v)
        if (h_.degree(v) >= d) b.set(v);
      deg_ge_.push_back(std::move(b));
    }
    for (Vertex p = 0; p < np; ++p)
      deg_index_[p] = static_cast<int>(std::lower_bound(f_.distinct_degrees_.begin(), f_.distinct_degrees_.end(),
                                                        f_.degree_[p]) -
                                       f_.distinct_degrees_.begin());
    scratch_.assign(np + 2, Bitset(nh));
    unassigned_ = np;
  }

  std::optional<Embedding> run_forced(Edge forced) {
    const std::size_t np = f_.pattern_.order();
    if (np > h_.order() || f_.pattern_.size() == 0) return std::nullopt;
    for (auto [x, y] : f_.seeds_) {
      ++stats_->seeds_tried;
      if (f_.degree_[x] > h_.degree(forced.u) || f_.degree_[y] > h_.degree(forced.v)) continue;
      seeded_[x] = seeded_[y] = 1;
      seeded_comp_ = f_.comp_of_[x];
      bool ok = assign(x, forced.u) && assign(y, forced.v) && dominance_ok() && dfs(0);
      if (ok) return Embedding{img_};
      reset();
    }
    return std::nullopt;
  }

  std::optional<Embedding> run_free() {
    if (f_.pattern_.order() > h_.order()) return std::nullopt;
    if (dominance_ok() && dfs(0)) return Embedding{img_};
    return std::nullopt;
  }

 private:
  void reset() {
    for (Vertex p = 0; p < img_.size(); ++p)
      if (img_[p] != kUnmapped) unassign(p);
    std::fill(seeded_.begin(), seeded_.end(), 0);
    seeded_comp_ = -1;
  }

  bool twin_constrained(Vertex p) const { return f_.twin_class_[p] >= 0 && !seeded_[p]; }

  // Restricts `out` to images compatible with already placed twins of p.
  void apply_twin_window(Vertex p, Bitset& out) const {
    if (!twin_constrained(p)) return;
    std::size_t lo = kUnmapped;
    std::size_t hi = kUnmapped;
    for (Vertex m : f_.twin_members_[f_.twin_class_[p]]) {
      if (m == p || seeded_[m] || img_[m] == kUnmapped) continue;
      if (m < p) {
        if (lo == kUnmapped || img_[m] > lo) lo = img_[m];
      } else if (hi == kUnmapped || img_[m] < hi) {
        hi = img_[m];
      }
    }
    if (lo != kUnmapped) clear_through(out, lo);
    if (hi != kUnmapped) clear_from(out, hi);
  }

  std::size_t candidates(Vertex p, Bitset& out) const {
    out = deg_ge_[deg_index_[p]];
    out.and_not(used_);
    for (Vertex q : f_.pattern_.neighbors(p))
      if (img_[q] != kUnmapped) out &= h_.row(img_[q]);
    apply_twin_window(p, out);
    return out.count();
  }

  bool assign(Vertex p, Vertex h) {
    if (used_.test(h)) return false;
    img_[p] = h;
    used_.set(h);
    --unassigned_;
    for (Vertex q : f_.pattern_.neighbors(p)) {
      ++assigned_nbrs_[q];
      if (img_[q] != kUnmapped && !h_.adjacent(h, img_[q])) return false;
    }
    const int c = f_.comp_of_[p];
    if (++assigned_in_comp_[c] == static_cast<int>(f_.comps_[c].size())) return close_component(c);
    return true;
  }

  void unassign(Vertex p) {
    const int c = f_.comp_of_[p];
    if (assigned_in_comp_[c]-- == static_cast<int>(f_.comps_[c].size())) min_img_[c] = kUnmapped;
    for (Vertex q : f_.pattern_.neighbors(p)) --assigned_nbrs_[q];
    used_.reset(img_[p]);
    img_[p] = kUnmapped;
    ++unassigned_;
  }

  bool close_component(int c) {
    Vertex lo = kUnmapped;
    for (Vertex v : f_.comps_[c]) lo = std::min(lo, img_[v]);
    min_img_[c] = lo;
    if (c != seeded_comp_) {
      const int g = f_.comp_group_[c];
      for (std::size_t o = 0; o < f_.comps_.size(); ++o) {
        if (static_cast<int>(o) == c || f_.comp_group_[o] != g || static_cast<int>(o) == seeded_comp_) continue;
        if (min_img_[o] == kUnmapped) continue;
        if ((static_cast<int>(o) < c) != (min_img_[o] < lo)) return false;
      }
    }
    return unassigned_ == 0 || dominance_ok();
  }

  // Free host vertices must dominate the unplaced pattern vertices degree-wise.
  bool dominance_ok() const {
    std::vector<std::uint32_t> pd;
    pd.reserve(unassigned_);
    for (Vertex p = 0; p < img_.size(); ++p)
      if (img_[p] == kUnmapped) pd.push_back(f_.degree_[p]);
    std::vector<std::uint32_t> hd;
    hd.reserve(h_.order());
    for (Vertex v = 0; v < h_.order(); ++v)
      if (!used_.test(v)) hd.push_back(static_cast<std::uint32_t>(h_.degree(v)));
    if (hd.size() < pd.size()) return false;
    std::sort(pd.rbegin(), pd.rend());
    std::sort(hd.rbegin(), hd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i)
      if (hd[i] < pd[i]) return false;
    return free_dominance_ok();
  }

  // Each unplaced pattern vertex needs an image with at least as many free
  // neighbours as it has unplaced neighbours.
  bool free_dominance_ok() const {
    std::vector<std::uint32_t> need;
    need.reserve(unassigned_);
    for (Vertex p = 0; p < img_.size(); ++p)
      if (img_[p] == kUnmapped) need.push_back(f_.degree_[p] - assigned_nbrs_[p]);
    std::vector<std::uint32_t> have;
    have.reserve(h_.order());
    for (Vertex v = 0; v < h_.order(); ++v)
      if (!used_.test(v))
        have.push_back(static_cast<std::uint32_t>(h_.degree(v) - h_.row(v).intersection_count(used_)));
    if (have.size() < need.size()) return false;
    std::sort(need.rbegin(), need.rend());
    std::sort(have.rbegin(), have.rend());
    for (std::size_t i = 0; i < need.size(); ++i)
      if (have[i] < need[i]) return false;
    return true;
  }

  bool dfs(std::size_t depth) {
    if (unassigned_ == 0) return true;
    if (++stats_->nodes > limits_.max_nodes) throw BudgetExceeded("embedding search node budget exhausted");
    if (!free_dominance_ok()) return false;

    Bitset& cand = scratch_[depth];
    Bitset& tmp = scratch_[depth + 1];
    Vertex best = kUnmapped;
    std::size_t best_count = 0;
    for (Vertex p = 0; p < img_.size(); ++p) {
      if (img_[p] != kUnmapped || assigned_nbrs_[p] == 0) continue;
      std::size_t cnt = candidates(p, tmp);
      if (cnt == 0) return false;
      bool better = best == kUnmapped || cnt < best_count ||
                    (cnt == best_count && f_.degree_[p] > f_.degree_[best]);
      if (better) {
        best = p;
        best_count = cnt;
        std::swap(cand, tmp);
      }
    }
    if (best == kUnmapped) {
      // Open the largest untouched component at its highest-degree vertex.
      int pick = -1;
      for (std::size_t c = 0; c < f_.comps_.size(); ++c) {
        if (assigned_in_comp_[c] != 0) continue;
        if (pick < 0 || f_.comps_[c].size() > f_.comps_[pick].size()) pick = static_cast<int>(c);
      }
      for (Vertex v : f_.comps_[pick])
        if (best == kUnmapped || f_.degree_[v] > f_.degree_[best]) best = v;
      if (candidates(best, cand) == 0) return false;
    }
    // scratch_[depth + 1] is reused by the child, so walk a private copy.
    const Bitset choices = cand;
    for (std::size_t h = choices.find_first(); h < choices.size(); h = choices.find_next(h + 1)) {
      if (assign(best, static_cast<Vertex>(h)) && dfs(depth + 1)) return true;
      unassign(best);
    }
    return false;
  }

  const CopyFinder& f_;
  const HostAdjacency& h_;
  SearchLimits limits_;
  SearchStats local_stats_;
  SearchStats* stats_;

  std::vector<Vertex> img_;
  Bitset used_;
  std::vector<char> seeded_;
  int seeded_comp_ = -1;
  std::vector<std::uint32_t> assigned_nbrs_;
  std::vector<int> assigned_in_comp_;
  std::vector<Vertex> min_img_;
  std::vector<Bitset> deg_ge_;
  std::vector<int> deg_index_;
  std::vector<Bitset> scratch_;
  std::size_t unassigned_ = 0;
};

std::optional<Embedding> CopyFinder::find_with_edge(const HostAdjacency& host, Edge forced, SearchLimits limits,
                                                    SearchStats* stats) const {
  forced = make_edge(forced.u, forced.v);
  if (forced.v >= host.order() || !host.adjacent(forced.u, forced.v))
    throw InvalidArgument("forced edge is not a host edge");
  EmbeddingSearch search(*this, host, limits, stats);
  return search.run_forced(forced);
}

std::optional<Embedding> CopyFinder::find_any(const HostAdjacency& host, SearchLimits limits,
                                              SearchStats* stats) const {
  EmbeddingSearch search(*this, host, limits, stats);
  return search.run_free();
}

std::optional<Embedding> find_new_copy(const Graph& pattern, const Graph& host, Edge forced) {
  return CopyFinder(pattern).find_with_edge(HostAdjacency(host), forced);
}

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host) {
  return CopyFinder(pattern).find_any(HostAdjacency(host));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return find_embedding(a, b).has_value();
}

bool is_valid_embedding(const Graph& pattern, const HostAdjacency& host, const Embedding& emb,
                        std::optional<Edge> forced) {
  if (emb.map.size() != pattern.order()) return false;
  std::set<Vertex> image;
  for (Vertex h : emb.map) {
    if (h >= host.order() || !image.insert(h).second) return false;
  }
  bool covered = !forced.has_value();
  for (const auto& e : pattern.edges()) {
    Vertex a = emb.map[e.u];
    Vertex b = emb.map[e.v];
    if (!host.adjacent(a, b)) return false;
    if (forced && make_edge(a, b) == make_edge(forced->u, forced->v)) covered = true;
  }
  return covered;
}

bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& emb, std::optional<Edge> forced) {
  return is_valid_embedding(pattern, HostAdjacency(host), emb, forced);
}

std::vector<Edge> image_edges(const Graph& pattern, const Embedding& emb) {
  std::vector<Edge> out;
  out.reserve(pattern.size());
  for (const auto& e : pattern.edges()) out.push_back(make_edge(emb.map[e.u], emb.map[e.v]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wsat
