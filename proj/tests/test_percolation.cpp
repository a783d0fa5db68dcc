#include <random>
#include <set>

#include "doctest.h"
#include "wsat/errors.hpp"
#include "wsat/percolation.hpp"

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

}  // namespace

TEST_CASE("closure examples") {
  auto t = closure(star_graph(5), complete_graph(3));
  CHECK(t.final_graph() == complete_graph(5));
  CHECK(t.steps.size() == 6);
  CHECK(validate_trace(t));
  CHECK(closure(Graph(4), complete_graph(3)).steps.empty());
  CHECK(closure(complete_graph(6), cycle_graph(4)).steps.empty());
}

TEST_CASE("weak saturation decisions") {
  CHECK(is_weakly_saturated(star_graph(6), complete_graph(3)));
  // A chord of C5 closes a triangle, and the process runs to K5.
  CHECK(is_weakly_saturated(cycle_graph(5), complete_graph(3)));
  CHECK_FALSE(is_weakly_saturated(Graph(5, {{0, 1}, {2, 3}}), complete_graph(3)));
  CHECK_FALSE(is_weakly_saturated(path_graph(5), complete_graph(4)));
  CHECK(is_weakly_saturated(complete_graph(3), complete_graph(2)));
  CHECK(is_weakly_saturated(Graph(4), complete_graph(2)));
}

TEST_CASE("trace json round trip") {
  auto t = closure(cycle_graph(6), complete_graph(3));
  auto j = trace_to_json(t);
  auto back = trace_from_json(nlohmann::json::parse(j.dump()), t.host, t.pattern);
  REQUIRE(back.steps.size() == t.steps.size());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(back.steps[i].edge == t.steps[i].edge);
    CHECK(back.steps[i].witness == t.steps[i].witness);
  }
  CHECK(validate_trace(back));
  back.steps[0].witness.map[0] = back.steps[0].witness.map[1];
  CHECK_FALSE(validate_trace(back));
  CHECK_THROWS_AS(trace_from_json(nlohmann::json::parse(R"([{"edge":[1]}])"), t.host, t.pattern), ParseError);
}

TEST_CASE("activation partition of the star for triangles") {
  auto t = closure(star_graph(5), complete_graph(3));
  auto ap = activation_partition(t);
  // The first restored edge {1,2} activates the centre with both leaves.
  REQUIRE(ap.parts.size() == 3);
  CHECK(ap.parts[0].vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(ap.parts[0].activating_edge == Edge{1, 2});
  CHECK(ap.parts[0].owns_activating_edge);
  CHECK(ap.parts[0].owned == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(ap.parts[1].vertices == std::vector<Vertex>{3});
  CHECK(ap.parts[2].vertices == std::vector<Vertex>{4});
  CHECK(ap.parts[1].owned == std::vector<Edge>{{0, 3}, {1, 3}});
  CHECK(count_a_matchings(ap) == 12);
  CHECK(ap.g_hat.size() == 4 + 3);
  int n = 0;
  enumerate_a_matchings(ap, [&](const AMatching& m) {
    auto r = rotate(ap, m);
    CHECK(r.size() == 4);
    CHECK(is_weakly_saturated(r, complete_graph(3)));
    CHECK(a_matching_at(ap, n) == m);
    ++n;
    return true;
  });
  CHECK(n == 12);
  CHECK(part_density(7, 15) == make_rational(15, 7));
  CHECK(part_density(3, 0) == 0);
  CHECK_THROWS_AS(part_density(0, 1), InvalidArgument);
}

TEST_CASE("activation partition errors") {
  auto t = closure(path_graph(5), complete_graph(4));
  CHECK_THROWS_AS(activation_partition(t), ActivationError);
  // A universal vertex is never needed by a triangle percolation on K4 from K4 minus nothing.
  auto t2 = closure(complete_graph(3), complete_graph(3));
  try {
    activation_partition(t2);
    FAIL("expected an error");
  } catch (const ActivationError& e) {
    CHECK(e.kind() == ActivationError::Kind::unactivated_vertex);
    CHECK(e.vertex() == Vertex{0});
  }
}

TEST_CASE("single part gives one rotation component") {
  // K4 minus an edge: restoring it activates every vertex at once.
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto ap = activation_partition(closure(g, complete_graph(4)));
  REQUIRE(ap.parts.size() == 1);
  auto rc = rotation_components(ap);
  CHECK(rc.size() == 1);
  CHECK(ap.free_edges.empty());
  CHECK_THROWS_AS(rotation_components(ap, 1), BudgetExceeded);
  CHECK_NOTHROW(rotation_components(ap, 6));
}

TEST_CASE("percolation properties on random hosts") {
  std::mt19937_64 rng(7);
  const Graph patterns[] = {complete_graph(3), cycle_graph(4), complete_graph(4), path_graph(3)};
  int saturated = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Graph& f = patterns[trial % 4];
    auto host = random_graph(rng, 5 + rng() % 4, 0.35);
    auto t = closure(host, f);
    CHECK(validate_trace(t));
    if (!t.reaches_complete()) continue;
    ++saturated;
    // Monotonicity under adding any edge.
    auto ne = host.non_edges();
    if (!ne.empty()) CHECK(is_weakly_saturated(host.plus_edge(ne[rng() % ne.size()]), f));
    ActivationPartition ap;
    try {
      ap = activation_partition(t);
    } catch (const ActivationError&) {
      continue;
    }
    std::set<Vertex> seen;
    std::set<Edge> owners;
    std::size_t owned_total = 0;
    for (std::size_t p = 0; p < ap.parts.size(); ++p) {
      for (Vertex v : ap.parts[p].vertices) CHECK(seen.insert(v).second);
      for (auto e : ap.parts[p].owned) {
        CHECK((ap.part_of[e.u] == static_cast<int>(p) || ap.part_of[e.v] == static_cast<int>(p)));
        CHECK(owners.insert(e).second);
        ++owned_total;
      }
    }
    CHECK(seen.size() == host.order());
    CHECK(owned_total + ap.free_edges.size() == ap.g_hat.size());
  }
  CHECK(saturated > 20);
}
