#include <random>

#include "doctest.h"
#include "wsat/embedding.hpp"
#include "wsat/errors.hpp"

using namespace wsat;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> es;
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) es.push_back({a, b});
  return Graph(n, es);
}

// Plain enumeration of all injective maps; independent of CopyFinder.
bool brute_has_copy(const Graph& pat, const Graph& host, std::optional<Edge> forced) {
  std::vector<Vertex> map(pat.order());
  std::vector<char> used(host.order(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == pat.order()) {
      bool hit = !forced;
      for (auto e : pat.edges()) {
        if (!host.adjacent(map[e.u], map[e.v])) return false;
        if (forced && make_edge(map[e.u], map[e.v]) == *forced) hit = true;
      }
      return hit;
    }
    for (Vertex h = 0; h < host.order(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (Vertex q : pat.neighbors(i))
        if (q < i && !host.adjacent(map[q], h)) ok = false;
      if (!ok) continue;
      used[h] = 1;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("small examples for find_new_copy") {
  Graph star_plus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  auto e = find_new_copy(complete_graph(3), star_plus, {1, 2});
  REQUIRE(e);
  CHECK(is_valid_embedding(complete_graph(3), star_plus, *e, Edge{1, 2}));
  CHECK_FALSE(find_new_copy(complete_graph(3), path_graph(4), {1, 2}));
  CHECK_THROWS_AS(find_new_copy(complete_graph(3), path_graph(4), {0, 2}), InvalidArgument);
}

TEST_CASE("complete pattern in complete host with any forced edge") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto k = complete_graph(n);
    CopyFinder finder(k);
    HostAdjacency host(k);
    for (auto e : k.edges()) {
      auto emb = finder.find_with_edge(host, e);
      REQUIRE(emb);
      CHECK(is_valid_embedding(k, host, *emb, e));
    }
  }
}

TEST_CASE("embedding search agrees with brute force") {
  std::mt19937_64 rng(2024);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t np = 2 + rng() % 5;
    std::size_t nh = np + rng() % 3;
    auto pat = random_graph(rng, np, 0.5);
    if (pat.size() == 0) continue;
    auto host = random_graph(rng, nh, 0.6);
    if (host.size() == 0) continue;
    Edge forced = host.edges()[rng() % host.size()];
    auto emb = find_new_copy(pat, host, forced);
    CHECK(emb.has_value() == brute_has_copy(pat, host, forced));
    if (emb) {
      ++found;
      CHECK(is_valid_embedding(pat, host, *emb, forced));
    }
    CHECK(find_embedding(pat, host).has_value() == brute_has_copy(pat, host, std::nullopt));
  }
  CHECK(found > 50);
}

TEST_CASE("multi-component patterns with twins") {
  std::vector<Graph> parts{complete_graph(3), complete_graph(3), path_graph(3)};
  auto pat = disjoint_union(parts);
  std::vector<Graph> hp{complete_graph(4), complete_graph(3), cycle_graph(5)};
  auto host = disjoint_union(hp);
  for (auto e : host.edges()) {
    auto emb = find_new_copy(pat, host, e);
    CHECK(emb.has_value() == brute_has_copy(pat, host, e));
    if (emb) CHECK(is_valid_embedding(pat, host, *emb, e));
  }
}

TEST_CASE("isomorphism and budget") {
  long g1[] = {1, 4};
  long g2[] = {1, 3};
  CHECK(are_isomorphic(circulant(8, g1), circulant(8, std::vector<long>{3, 4})));
  CHECK_FALSE(are_isomorphic(circulant(6, g2), complete_graph(6)));
  CHECK(are_isomorphic(cycle_graph(5), Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
  // Petersen graph contains no K4; the search must visit nodes to prove it.
  Graph pet(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                 {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  SearchLimits lim{1};
  CHECK_THROWS_AS(CopyFinder(cycle_graph(5)).find_any(HostAdjacency(pet), lim), BudgetExceeded);
}
