#include <random>

#include "doctest.h"
#include "wsat/errors.hpp"
#include "wsat/graph.hpp"
#include "wsat/graph_io.hpp"
#include "wsat/rational.hpp"

using namespace wsat;

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("7/4") == Rational(7, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK(to_string(Rational(15, 7)) == "15/7");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(1, 3)) == 1);
  CHECK(round_half_up(Rational(5, 2)) == 3);
  CHECK(round_half_up(Rational(-5, 2)) == -2);
  CHECK(round_half_up(Rational(7, 3)) == 2);
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(make_edge(2, 2), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(g.edges().front() == Edge{0, 1});
  CHECK(g.degree(1) == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.non_edges().size() == 3);
  CHECK_FALSE(g.is_complete());
  CHECK(complete_graph(5).is_complete());
  CHECK(complete_graph(1).is_complete());
  CHECK(g.components().size() == 1);
  CHECK(Graph(3).components().size() == 3);
  CHECK_THROWS_AS(g.minus_edges(std::vector<Edge>{{0, 2}}), InvalidArgument);
}

TEST_CASE("circulant examples") {
  long g1[] = {1, 4};
  auto m8 = circulant(8, g1);
  CHECK(m8.size() == 12);
  CHECK(m8.min_degree() == 3);
  CHECK(m8.max_degree() == 3);
  long g2[] = {1, 2};
  CHECK(circulant(7, g2).size() == 14);
  long g3[] = {1, 3};
  CHECK(circulant(6, g3).size() == 9);
  long bad[] = {7};
  CHECK_THROWS_AS(circulant(7, bad), InvalidArgument);
  CHECK_THROWS_AS(circulant(2, g2), InvalidArgument);
}

TEST_CASE("circulants are regular") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 3 + rng() % 20;
    std::vector<long> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(1 + static_cast<long>(rng() % (k - 1)));
    auto g = circulant(k, gens);
    CHECK(g.min_degree() == g.max_degree());
  }
}

TEST_CASE("subdivide and disjoint union") {
  std::map<Edge, std::size_t> one;
  one[Edge{0, 1}] = 2;
  auto p = subdivide(complete_graph(2), one);
  CHECK(p.graph.order() == 3);
  CHECK(p.graph.size() == 2);
  std::map<Edge, std::size_t> all2;
  const auto c3 = cycle_graph(3);
  for (auto e : c3.edges()) all2[e] = 2;
  auto c6 = subdivide(cycle_graph(3), all2).graph;
  CHECK(c6.order() == 6);
  CHECK(c6.min_degree() == 2);
  CHECK(c6.components().size() == 1);
  std::map<Edge, std::size_t> partial;
  partial[Edge{0, 1}] = 1;
  CHECK_THROWS_AS(subdivide(cycle_graph(3), partial), InvalidArgument);

  std::vector<Graph> parts{complete_graph(7), complete_graph(100)};
  auto u = disjoint_union(parts);
  CHECK(u.order() == 107);
  CHECK(u.size() == 21 + 4950);
  CHECK(disjoint_union(std::vector<Graph>{}).order() == 0);
}

namespace {

// Contracts every subdivision path back to a single edge.
Graph contract(const Subdivision& s, std::size_t n) {
  return Graph(n, s.original_edges);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> es;
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) es.push_back({a, b});
  return Graph(n, es);
}

}  // namespace

TEST_CASE("subdivide then contract recovers the graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 9;
    auto g = random_graph(rng, n, 0.4);
    std::map<Edge, std::size_t> sched;
    for (auto e : g.edges()) sched[e] = 1 + rng() % 4;
    auto s = subdivide(g, sched);
    // Walk each internal path in the new graph and check it ends at the right pair.
    for (std::size_t i = 0; i < s.original_edges.size(); ++i) {
      Edge e = s.original_edges[i];
      const auto& mid = s.internal[i];
      CHECK(mid.size() + 1 == sched[e]);
      Vertex prev = e.u;
      for (Vertex w : mid) {
        CHECK(s.graph.adjacent(prev, w));
        CHECK(s.graph.degree(w) == 2);
        prev = w;
      }
      CHECK(s.graph.adjacent(prev, e.v));
    }
    CHECK(contract(s, n) == g);
  }
}

TEST_CASE("graph6 round trip and known encodings") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
  std::mt19937_64 rng(3);
  for (std::size_t n : {1, 5, 62, 63, 64, 130}) {
    auto g = random_graph(rng, n, 0.3);
    auto s = to_graph6(g);
    CHECK(from_graph6(s) == g);
    if (n >= 63) CHECK(s[0] == '~');
  }
}

TEST_CASE("edge list round trip") {
  auto g = cycle_graph(5);
  auto txt = to_edge_list(g);
  CHECK(txt.rfind("5 5\n0 1\n", 0) == 0);
  CHECK(from_edge_list(txt) == g);
  CHECK(parse_graph_text(txt) == g);
  CHECK(parse_graph_text("C~\n") == complete_graph(4));
  CHECK_THROWS_AS(from_edge_list("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError);
}
