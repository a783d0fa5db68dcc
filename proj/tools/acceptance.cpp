// Acceptance checks. One line per criterion: "criterion N: PASS|FAIL  detail".
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "wsat/constructions.hpp"
#include "wsat/embedding.hpp"
#include "wsat/errors.hpp"
#include "wsat/expander.hpp"
#include "wsat/extremal.hpp"
#include "wsat/graph_io.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

namespace {

// Pinned limits.
constexpr double kCliqueSeconds = 300;
constexpr int kGammaGraphs = 200;
constexpr std::size_t kGammaMaxOrder = 14;
constexpr std::size_t kMinRotationPairs = 20;
constexpr std::uint64_t kMaxRotationsPerHost = 5000;
constexpr double kTableSeconds = 60;
constexpr int kSmokeSamples = 100;
constexpr int kSmokeRequired = 90;  // out of kSmokeSamples

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Outcome clique_closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<long, long> cases[] = {{3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}};
  std::ostringstream d;
  bool ok = true;
  for (auto [s, n] : cases) {
    auto res = wsat_exact(static_cast<std::size_t>(n), complete_graph(static_cast<std::size_t>(s)));
    const long expect = (s - 2) * n - (s - 1) * (s - 2) / 2;
    const bool hit = res.value && static_cast<long>(*res.value) == expect;
    ok = ok && hit;
    d << "(" << s << "," << n << ")=" << (res.value ? std::to_string(*res.value) : "?") << (hit ? "" : "!") << " ";
  }
  const double secs = seconds_since(t0);
  d << "in " << secs << "s";
  return {ok && secs < kCliqueSeconds, d.str()};
}

Outcome gamma_cross() {
  std::mt19937_64 rng(20240601);
  int bad = 0;
  for (int i = 0; i < kGammaGraphs; ++i) {
    const std::size_t n = 1 + rng() % kGammaMaxOrder;
    std::bernoulli_distribution coin(0.15 + 0.7 * static_cast<double>(rng() % 100) / 100);
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) es.push_back({a, b});
    const Graph g(n, es);
    auto br = gamma_min_brute(g);
    auto ra = gamma_min_ratio(g);
    const bool ok = br.value == ra.value && !br.witness.empty() && !ra.witness.empty() &&
                    gamma_of(g, br.witness) == br.value && gamma_of(g, ra.witness) == ra.value;
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(kGammaGraphs) + " graphs, " + std::to_string(bad) + " discrepancies"};
}

Outcome sparse_identity() {
  const std::pair<unsigned, std::vector<std::size_t>> cases[] = {{2, {5, 8, 11}}, {3, {6, 8, 12}}, {4, {7, 9, 12}}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [delta, ks] : cases)
    for (auto k : ks) {
      const Rational got = gamma_min_ratio(sparse_family(delta, k)).value;
      const Rational want = make_rational(static_cast<long>(delta * k) - 2, static_cast<long>(2 * k));
      ok = ok && got == want;
      d << "d" << delta << "k" << k << "=" << to_string(got) << (got == want ? "" : "!") << " ";
    }
  return {ok, d.str()};
}

Outcome construction_identity() {
  const std::pair<unsigned, Rational> cases[] = {{3, make_rational(3, 2)}, {3, make_rational(8, 5)},
                                                 {3, make_rational(7, 4)}, {4, Rational(2)},
                                                 {4, make_rational(7, 3)}, {4, make_rational(5, 2)}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [delta, r] : cases) {
    auto params = solve_params(delta, r, delta == 3 ? kDefaultKMin3 : kDefaultKMin4);
    auto c = delta == 3 ? build_delta3(params) : build_delta4(params);
    const Rational got = gamma_min_ratio(c.graph).value;
    ok = ok && got == r;
    d << "d" << delta << ":" << to_string(r) << "@k" << params.k << "=" << to_string(got) << (got == r ? "" : "!")
      << " ";
  }
  return {ok, d.str()};
}

Outcome counterexample() {
  auto c = counterexample_15_7();
  const Rational g = gamma_min_ratio(c.graph).value;
  const Rational limit = counterexample_limit();
  // density(i) - 15/7 = (C(107,2) - 107*15/7) / (107 + 7i): strictly positive, decreasing to 0
  bool density_ok = limit == make_rational(15, 7);
  for (std::size_t i = 1; i <= 50; ++i) {
    const Rational gap = counterexample_density(i) - limit;
    const Rational expect = (make_rational(107 * 106 / 2) - make_rational(107 * 15, 7)) / make_rational(107 + 7 * static_cast<long>(i));
    density_ok = density_ok && gap == expect;
  }
  const bool wsat = is_weakly_saturated(counterexample_host(1), c.graph);
  std::ostringstream d;
  d << "gamma=" << to_string(g) << " limit=" << to_string(limit) << " density_closed_form=" << density_ok
    << " G_1 weakly saturated=" << wsat;
  return {g == 2 && density_ok && wsat, d.str()};
}

Outcome rotations() {
  const std::pair<Graph, std::vector<std::size_t>> cases[] = {
      {complete_graph(3), {4, 5, 6, 7}},
      {complete_graph(4), {5, 6}},
      {cycle_graph(4), {4, 5, 6}},
      {k4_minus_edge(), {4, 5, 6}},
  };
  std::size_t pairs = 0, rotations_checked = 0, failures = 0;
  for (const auto& [f, ns] : cases) {
    const CopyFinder finder(f);
    for (auto n : ns) {
      auto res = wsat_exact(n, f);
      if (!res.conclusive()) {
        ++failures;
        continue;
      }
      for (const auto& host : res.all_witnesses) {
        ++pairs;
        try {
          auto ap = activation_partition(closure(host, finder));
          std::uint64_t seen = 0;
          enumerate_a_matchings(ap, [&](const AMatching& m) {
            const Graph rot = rotate(ap, m);
            if (rot.size() != host.size() || !is_weakly_saturated(rot, finder)) ++failures;
            ++rotations_checked;
            return ++seen < kMaxRotationsPerHost;
          });
        } catch (const std::exception&) {
          ++failures;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " certified-minimum hosts, " << rotations_checked << " rotations, " << failures << " failures";
  return {pairs >= kMinRotationPairs && failures == 0, d.str()};
}

Outcome f_tilde() {
  std::ostringstream d;
  bool ok = true;
  const std::pair<const char*, Graph> fs[] = {{"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}, {"K4-e", k4_minus_edge()}};
  for (const auto& [name, f] : fs) {
    const Rational a = gamma_min_ratio(f).value;
    const Rational b = gamma_min_ratio(build_f_tilde(f, 0)).value;
    ok = ok && a == b;
    d << name << ":" << to_string(a) << (a == b ? "=" : "!=") << to_string(b) << " ";
  }
  const std::pair<const char*, Graph> seqs[] = {{"K4-e", k4_minus_edge()}, {"P3", path_graph(3)}};
  for (const auto& [name, f] : seqs) {
    const auto s = gamma_min_brute(f).witness;
    const CopyFinder finder(build_f_tilde(f, 0));
    bool perc = true;
    for (std::size_t i = 0; i <= 3; ++i) perc = perc && is_weakly_saturated(ftilde_host_sequence(f, s, i), finder);
    ok = ok && perc;
    d << name << " G_0..G_3 percolate=" << perc << " ";
  }
  return {ok, d.str()};
}

Outcome table() {
  const auto t0 = std::chrono::steady_clock::now();
  auto rep = verify_table(6);
  std::size_t passed = 0;
  for (const auto& r : rep.rows) passed += r.pass();
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << passed << "/" << rep.rows.size() << " rows in " << secs << "s";
  return {rep.all_pass() && rep.rows.size() == 12 && secs < kTableSeconds, d.str()};
}

Outcome smoke() {
  std::mt19937_64 rng(77);
  int good = 0;
  for (int i = 0; i < kSmokeSamples; ++i) {
    auto g = sample_regular_graph(6, 24, rng);
    if (i_alpha_exact(g, make_rational(1, 2)).value >= make_rational(10437, 10000)) ++good;
  }
  return {good >= kSmokeRequired, "(statistical, non-rigorous) " + std::to_string(good) + "/" +
                                      std::to_string(kSmokeSamples) + " samples with i_0.5 >= 1.0437"};
}

}  // namespace

int main() {
  const std::pair<int, std::function<Outcome()>> criteria[] = {
      {1, clique_closed_form},  {2, gamma_cross},   {3, sparse_identity}, {4, construction_identity}, {5, counterexample},
      {6, rotations}, {7, f_tilde}, {8, table}, {9, smoke},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s  [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed;
}
