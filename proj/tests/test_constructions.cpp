#include <chrono>

#include "doctest.h"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/extremal.hpp"
#include "wsat/graph_io.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

// Witness set, target value and minimum degree checks shared by every family.
void check_family(const Construction& c, const Rational& target, unsigned delta) {
  CHECK(c.predicted_gamma == target);
  CHECK(gamma_of(c.graph, c.witness_set) == target);
  CHECK(c.graph.min_degree() == delta);
  CHECK(from_graph6(to_graph6(c.graph)) == c.graph);
}

}  // namespace

TEST_CASE("parameter solver") {
  auto a = solve_params(3, q(3, 2), 8);
  CHECK(a.k == 8);
  CHECK(a.p == 1);
  CHECK(a.t == 2);
  for (std::size_t kmin : {8u, 12u, 20u}) {
    auto b = solve_params(3, q(7, 4), kmin);
    CHECK(b.p == 1);
    CHECK(b.t == b.k + 4);
  }
  auto c = solve_params(4, Rational(2), 9);
  CHECK(c.k == 9);
  CHECK(c.t == 1);
  auto d = solve_params(3, q(8, 5), 8);
  CHECK(d.k == 10);
  CHECK(d.t == 5);
  CHECK(solve_params(4, q(7, 3), 9).t == 6);
  CHECK(solve_params(4, q(5, 2), 9).t == 11);
  CHECK(solve_params(3, q(11, 6), 8).p == 2);
  CHECK(solve_params(3, q(15, 8), 8).p == 3);
  CHECK(solve_params(4, q(8, 3), 9).p == 2);
  CHECK_THROWS_AS(solve_params(3, Rational(2), 8), InvalidArgument);
  CHECK_THROWS_AS(solve_params(4, q(3, 2), 9), InvalidArgument);
  CHECK_THROWS_AS(solve_params(5, q(5, 2), 9), InvalidArgument);

  // every solved instance satisfies the t formula's target exactly
  for (unsigned delta : {3u, 4u})
    for (long num = 0; num < 12; ++num) {
      const Rational r = delta == 3 ? q(3, 2) + q(num, 24) : Rational(2) + q(num, 12);
      auto pr = solve_params(delta, r, delta == 3 ? 8 : 9);
      const long k = static_cast<long>(pr.k), p = static_cast<long>(pr.p), t = static_cast<long>(pr.t);
      const Rational g = delta == 3 ? q(k * (6 * p - 3) + 4 * t - 2, k * (3 * p - 1) + 2 * t)
                                    : q(k * (6 * p - 4) + 3 * t - 1, k * (2 * p - 1) + t);
      CHECK(g == r);
    }
}

TEST_CASE("sparse family") {
  auto m = sparse_family(3, 8);
  CHECK(m.size() == 12);
  CHECK(gamma_min_ratio(m).value == q(11, 8));
  CHECK(sparse_family(2, 5) == cycle_graph(5));
  CHECK(gamma_min_ratio(sparse_family(2, 5)).value == q(4, 5));
  CHECK_THROWS_AS(sparse_family(3, 7), InvalidArgument);
  CHECK_THROWS_AS(sparse_family(4, 4), InvalidArgument);
  for (unsigned delta : {2u, 3u, 4u, 5u})
    for (std::size_t k = delta + 1; k <= delta + 6; ++k) {
      if (delta % 2 && k % 2) continue;
      auto g = sparse_family(delta, k);
      CHECK(g.min_degree() == delta);
      CHECK(g.max_degree() == delta);
      CHECK(gamma_min_ratio(g).value == q(delta * k - 2, 2 * k));
    }
}

TEST_CASE("spread schedule") {
  CHECK(spread_indices(4, 2) == std::vector<std::size_t>{0, 2});
  CHECK(spread_indices(5, 2) == std::vector<std::size_t>{0, 3});
  CHECK(spread_indices(6, 0).empty());
  CHECK_THROWS_AS(spread_indices(3, 4), InvalidArgument);
  for (std::size_t total = 1; total <= 30; ++total)
    for (std::size_t count = 0; count <= total; ++count) {
      auto idx = spread_indices(total, count);
      std::vector<char> mark(total, 0);
      for (auto i : idx) mark[i] = 1;
      CHECK(std::count(mark.begin(), mark.end(), 1) == static_cast<long>(count));
      // any s consecutive slots hold at least floor(s * count / total) chosen ones
      for (std::size_t s = 1; s <= total; ++s)
        for (std::size_t start = 0; start + s <= total; ++start) {
          std::size_t got = 0;
          for (std::size_t j = start; j < start + s; ++j) got += mark[j];
          CHECK(got >= s * count / total);
        }
    }
}

TEST_CASE("delta 3 family") {
  for (const Rational& r : {q(3, 2), q(8, 5), q(7, 4), q(5, 3), q(9, 5)}) {
    auto params = solve_params(3, r, 8);
    auto c = build_delta3(params);
    INFO(to_string(r));
    const long k = static_cast<long>(params.k), p = static_cast<long>(params.p), t = static_cast<long>(params.t);
    CHECK(static_cast<long>(c.witness_set.size()) * 2 == k * (3 * p - 1) + 2 * t);
    CHECK(static_cast<long>(m_f(c.graph, c.witness_set)) * 2 == k * (6 * p - 3) + 4 * t);
    CHECK(c.long_paths.size() == params.t);
    check_family(c, r, 3);
  }
  auto c = build_delta3(solve_params(3, q(3, 2), 12));
  CHECK(c.params.k == 12);
  auto g = gamma_min_ratio(c.graph);
  CHECK(g.value == q(3, 2));
  CHECK(g.witness == c.witness_set);
}

TEST_CASE("delta 4 family") {
  for (const Rational& r : {Rational(2), q(7, 3), q(5, 2), q(8, 3)}) {
    auto params = solve_params(4, r, 9);
    auto c = build_delta4(params);
    INFO(to_string(r));
    const long k = static_cast<long>(params.k), p = static_cast<long>(params.p), t = static_cast<long>(params.t);
    CHECK(static_cast<long>(c.witness_set.size()) == k * (2 * p - 1) + t);
    CHECK(static_cast<long>(m_f(c.graph, c.witness_set)) == k * (6 * p - 4) + 3 * t);
    check_family(c, r, 4);
  }
  auto c = build_delta4(solve_params(4, Rational(2), 9));
  CHECK(c.graph.order() == 10 + 3 * 10 + 4 + 2);
  CHECK(gamma_min_ratio(c.graph).value == 2);
  ConstructionParams bad = c.params;
  bad.k = 10;
  CHECK_THROWS_AS(build_delta4(bad), InvalidArgument);
}

TEST_CASE("gamma of the full graph at the smallest valid k") {
  const std::pair<unsigned, Rational> cases[] = {{3, q(3, 2)}, {3, q(8, 5)}, {3, q(7, 4)},
                                                 {4, Rational(2)}, {4, q(7, 3)}, {4, q(5, 2)}};
  for (const auto& [delta, r] : cases) {
    auto params = solve_params(delta, r, delta == 3 ? kDefaultKMin3 : kDefaultKMin4);
    auto c = delta == 3 ? build_delta3(params) : build_delta4(params);
    auto g = gamma_min_ratio(c.graph);
    INFO(delta << " " << to_string(r) << " k=" << params.k << " got " << to_string(g.value));
    CHECK(g.value == r);
    CHECK(gamma_of(c.graph, g.witness) == g.value);
  }
}

TEST_CASE("high delta family") {
  auto c = build_high_delta(6, Rational(3), 16, 1);
  CHECK(c.params.t == 1);
  check_family(c, Rational(3), 6);
  CHECK(gamma_min_ratio(c.graph).value == 3);

  auto d = build_high_delta(6, q(13, 4), 16, 2);
  CHECK(d.params.t == 5);
  check_family(d, q(13, 4), 6);
  CHECK(gamma_min_ratio(d.graph).value == q(13, 4));

  // t stays in (0, k/2 + 1] across the admissible ratios
  for (long num = 0; num <= 4; ++num) {
    auto e = build_high_delta(6, Rational(3) + q(num, 8), 40, 3, {.expander_check = false});
    CHECK(e.params.t > 0);
    CHECK(e.params.t <= 21);
    CHECK(gamma_of(e.graph, e.witness_set) == Rational(3) + q(num, 8));
  }
  auto again = build_high_delta(6, Rational(3), 16, 1);
  CHECK(again.graph == c.graph);
  CHECK_THROWS_AS(build_high_delta(6, Rational(4), 16, 1), InvalidArgument);
  CHECK_THROWS_AS(build_high_delta(6, q(13, 4), 18, 1), InvalidArgument);
  CHECK_THROWS_AS(build_high_delta(5, q(5, 2), 16, 1), InvalidArgument);
}

TEST_CASE("counterexample graph") {
  auto c = counterexample_15_7();
  CHECK(c.graph.order() == 114);
  const std::vector<Vertex> h{0, 1, 2, 3, 4, 5, 6};
  CHECK(c.graph.induced(h).size() == 15);
  CHECK(gamma_of(c.graph, h) == 2);
  CHECK(gamma_min_ratio(c.graph).value == 2);
  CHECK(*c.predicted_limit == q(15, 7));
  CHECK(c.metadata()["predicted_limit"] == "15/7");

  CHECK(counterexample_host(0) == complete_graph(107));
  auto g1 = counterexample_host(1);
  CHECK(g1.order() == 114);
  CHECK(g1.size() == 107 * 106 / 2 + 15);
  CHECK(counterexample_density(1) == make_rational(static_cast<long>(g1.size()), 114));
  CHECK(counterexample_density(3) ==
        make_rational(static_cast<long>(counterexample_host(3).size()), static_cast<long>(counterexample_host(3).order())));
  CHECK(counterexample_limit() == q(15, 7));
  // density approaches the limit from above
  CHECK(counterexample_density(1000) > q(15, 7));
  CHECK(counterexample_density(1000) - q(15, 7) < counterexample_density(10) - q(15, 7));
}

TEST_CASE("counterexample host percolates") {
  auto c = counterexample_15_7();
  auto g1 = counterexample_host(1);
  auto trace = closure(g1, c.graph);
  CHECK(trace.reaches_complete());
  CHECK(validate_trace(trace));
}
