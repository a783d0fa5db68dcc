// wsatlab: command-line front end.
//
// Every subcommand prints one JSON report {command, inputs, results,
// provenance}. Exit codes: 0 success, 1 usage or input error, 2 a verification
// failed, 3 a search budget ran out (results marked inconclusive).

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsat/canonical.hpp"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/expander.hpp"
#include "wsat/extremal.hpp"
#include "wsat/graph_io.hpp"
#include "wsat/percolation.hpp"

using nlohmann::json;
using namespace wsat;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kBudget = 3 };

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  int exit_code = kOk;
};

// A file path, or failing that the argument itself as graph6 / edge-list text.
Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  // '.' and '/' never occur in graph6 text
  if (arg.find_first_of("./") != std::string::npos) throw InvalidArgument("no such file: " + arg);
  return parse_graph_text(arg);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json gamma_json(const GammaResult& r, double ms) {
  return {{"invariant", "gamma"},
          {"value", to_string(r.value)},
          {"witness", r.witness},
          {"method", to_string(r.method)},
          {"nodes_explored", r.nodes_explored},
          {"wall_time_ms", ms}};
}

json trace_summary(const PercolationTrace& t) {
  const Graph fin = t.final_graph();
  return {{"steps", t.steps.size()},
          {"final_edges", fin.size()},
          {"complete", t.reaches_complete()},
          {"final_graph", to_graph6(fin)}};
}

json pairs_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak saturation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (0 = OpenMP default)");
  app.add_option("--seed", seed, "random seed")->envname("WSATLAB_SEED");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  Report rep;

  std::string graph_arg, pattern_arg, method = "auto", trace_path;
  auto* gamma = app.add_subcommand("gamma", "minimum of (m_F(S) - 1)/|S|");
  gamma->add_option("graph", graph_arg)->required();
  gamma->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "ratio"}));

  auto* clos = app.add_subcommand("closure", "F-bootstrap percolation closure");
  clos->add_option("host", graph_arg)->required();
  clos->add_option("--pattern", pattern_arg)->required();
  clos->add_option("--trace", trace_path, "write the step trace as JSON");

  auto* iswsat = app.add_subcommand("is-wsat", "does the host percolate to the complete graph");
  iswsat->add_option("host", graph_arg)->required();
  iswsat->add_option("--pattern", pattern_arg)->required();

  std::size_t n = 0;
  std::uint64_t budget = 1'000'000;
  auto* wsat = app.add_subcommand("wsat", "exact wsat(n, F) for small n");
  wsat->add_option("--n", n)->required()->check(CLI::Range(1, static_cast<int>(kCanonicalMaxOrder)));
  wsat->add_option("--pattern", pattern_arg)->required();
  wsat->add_option("--budget", budget, "host graphs to test before giving up");

  std::string family, ratio_arg;
  std::size_t k = 0;
  unsigned delta = 0;
  bool no_expander_check = false, verify = false;
  auto* construct = app.add_subcommand("construct", "build a graph family");
  construct->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"sparse", "delta3", "delta4", "high-delta", "counterexample"}));
  construct->add_option("--ratio", ratio_arg, "target gamma as a/b");
  construct->add_option("--k", k, "base size (k_min for delta3/delta4)");
  construct->add_option("--delta", delta, "minimum degree (sparse, high-delta)");
  construct->add_flag("--no-expander-check", no_expander_check);
  construct->add_flag("--verify", verify, "recompute gamma with the ratio solver");

  std::optional<std::uint64_t> matching_index;
  std::uint64_t max_matchings = 1'000'000;
  auto* rot = app.add_subcommand("rotate", "activation partition and rotations");
  rot->add_option("host", graph_arg)->required();
  rot->add_option("--pattern", pattern_arg)->required();
  rot->add_option("--matching", matching_index, "index of the A-matching to rotate along");
  rot->add_option("--max-matchings", max_matchings);

  std::size_t pad = 0;
  bool dedup = false;
  auto* ftilde = app.add_subcommand("ftilde", "edge-superset union F~");
  ftilde->add_option("pattern", pattern_arg)->required();
  ftilde->add_option("--pad", pad, "clique vertices added before taking supersets");
  ftilde->add_flag("--dedup", dedup, "keep one component per isomorphism class");

  auto* exp = app.add_subcommand("expander", "random regular expansion numerics");
  exp->require_subcommand(1);
  exp->fallthrough();
  unsigned r = 6;
  std::string alpha_arg = "1/2", eta_arg;
  auto* table = exp->add_subcommand("table", "check the lower-bound table");
  table->add_option("--r", r);
  auto* check = exp->add_subcommand("check", "evaluate the expansion condition");
  check->add_option("--alpha", alpha_arg);
  check->add_option("--r", r);
  check->add_option("--eta", eta_arg, "evaluate at this eta instead of searching");
  std::size_t sample_n = 24;
  bool with_i_alpha = false;
  auto* sample = exp->add_subcommand("sample", "configuration-model regular graph");
  sample->add_option("--r", r);
  sample->add_option("--n", sample_n);
  sample->add_option("--alpha", alpha_arg);
  sample->add_flag("--i-alpha", with_i_alpha, "also compute i_alpha exactly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*gamma) {
      rep.command = "gamma";
      const Graph g = load_graph(graph_arg);
      rep.inputs = {{"graph", to_graph6(g)}, {"method", method}};
      const bool brute = method == "brute" || (method == "auto" && g.order() <= kGammaBruteCap);
      auto res = brute ? gamma_min_brute(g) : gamma_min_ratio(g);
      rep.results = gamma_json(res, elapsed_ms(t0));
    } else if (*clos || *iswsat) {
      rep.command = *clos ? "closure" : "is-wsat";
      const Graph host = load_graph(graph_arg);
      const Graph pattern = load_graph(pattern_arg);
      rep.inputs = {{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}};
      auto trace = closure(host, pattern);
      if (*clos) {
        rep.results = trace_summary(trace);
        if (!trace_path.empty()) {
          std::ofstream f(trace_path);
          if (!f) throw InvalidArgument("cannot write " + trace_path);
          f << trace_to_json(trace).dump() << '\n';
        }
      } else {
        rep.results = {{"weakly_saturated", trace.reaches_complete()}, {"steps", trace.steps.size()}};
      }
      rep.results["wall_time_ms"] = elapsed_ms(t0);
    } else if (*wsat) {
      rep.command = "wsat";
      const Graph pattern = load_graph(pattern_arg);
      rep.inputs = {{"n", n}, {"pattern", to_graph6(pattern)}, {"budget", budget}};
      auto res = wsat_exact(n, pattern, budget);
      rep.results = {{"invariant", "wsat"},
                     {"conclusive", res.conclusive()},
                     {"lower_bound", res.lower_bound},
                     {"upper_bound", res.upper_bound},
                     {"graphs_tested", res.graphs_tested},
                     {"nodes_explored", res.graphs_tested},
                     {"method", "orderly"}};
      if (res.value) rep.results["value"] = std::to_string(*res.value);
      if (res.witness) rep.results["witness"] = to_graph6(*res.witness);
      rep.results["wall_time_ms"] = elapsed_ms(t0);
      if (!res.conclusive()) rep.exit_code = kBudget;
    } else if (*construct) {
      rep.command = "construct";
      rep.inputs = {{"family", family}};
      Construction c;
      auto need_ratio = [&] {
        if (ratio_arg.empty()) throw InvalidArgument("--ratio is required for family " + family);
        rep.inputs["ratio"] = ratio_arg;
        return parse_rational(ratio_arg);
      };
      if (family == "sparse") {
        if (delta == 0 || k == 0) throw InvalidArgument("sparse needs --delta and --k");
        rep.inputs["delta"] = delta;
        rep.inputs["k"] = k;
        c.family = "sparse";
        c.graph = sparse_family(delta, k);
        c.params = {delta, make_rational(static_cast<long>(delta * k) - 2, static_cast<long>(2 * k)), k, 0, 0, 0};
        for (Vertex v = 0; v < k; ++v) c.witness_set.push_back(v);
        c.predicted_gamma = c.params.ratio;
      } else if (family == "delta3" || family == "delta4") {
        const unsigned d = family == "delta3" ? 3 : 4;
        const Rational ratio = need_ratio();
        const std::size_t k_min = k ? k : (d == 3 ? kDefaultKMin3 : kDefaultKMin4);
        rep.inputs["k_min"] = k_min;
        auto params = solve_params(d, ratio, k_min);
        c = d == 3 ? build_delta3(params) : build_delta4(params);
      } else if (family == "high-delta") {
        const Rational ratio = need_ratio();
        const unsigned d = delta ? delta : 6;
        if (k == 0) throw InvalidArgument("high-delta needs --k");
        rep.inputs["delta"] = d;
        rep.inputs["k"] = k;
        HighDeltaOptions opts;
        opts.expander_check = !no_expander_check;
        c = build_high_delta(d, ratio, k, seed, opts);
      } else {
        c = counterexample_15_7();
      }
      rep.results = c.metadata();
      const bool round_trip = from_graph6(to_graph6(c.graph)) == c.graph;
      const bool witness_ok = gamma_of(c.graph, c.witness_set) == c.predicted_gamma;
      rep.results["graph6_round_trip"] = round_trip;
      rep.results["witness_gamma"] = to_string(gamma_of(c.graph, c.witness_set));
      rep.results["order"] = c.graph.order();
      rep.results["size"] = c.graph.size();
      bool ok = round_trip && witness_ok;
      if (verify) {
        auto g = gamma_min_ratio(c.graph);
        rep.results["solver_gamma"] = to_string(g.value);
        ok = ok && g.value == c.predicted_gamma;
      }
      rep.results["wall_time_ms"] = elapsed_ms(t0);
      if (!ok) rep.exit_code = kVerify;
    } else if (*rot) {
      rep.command = "rotate";
      const Graph host = load_graph(graph_arg);
      const Graph pattern = load_graph(pattern_arg);
      rep.inputs = {{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}};
      auto trace = closure(host, pattern);
      auto ap = activation_partition(trace);
      json parts = json::array();
      for (const auto& p : ap.parts)
        parts.push_back({{"vertices", p.vertices},
                         {"activating_edge", {p.activating_edge.u, p.activating_edge.v}},
                         {"owned", pairs_json(p.owned)},
                         {"density", to_string(part_density(p.vertices.size(), p.owned.size()))}});
      rep.results = {{"parts", parts},
                     {"free_edges", pairs_json(ap.free_edges)},
                     {"g_hat", to_graph6(ap.g_hat)},
                     {"matchings", count_a_matchings(ap)}};
      if (matching_index) {
        rep.inputs["matching"] = *matching_index;
        if (*matching_index >= count_a_matchings(ap)) throw InvalidArgument("matching index out of range");
        auto m = a_matching_at(ap, *matching_index);
        const Graph rotated = rotate(ap, m);
        const bool wsat_ok = is_weakly_saturated(rotated, pattern);
        rep.results["matching"] = pairs_json(m);
        rep.results["rotated"] = to_graph6(rotated);
        rep.results["rotated_weakly_saturated"] = wsat_ok;
        rep.results["edge_count_preserved"] = rotated.size() == host.size();
        if (!wsat_ok || rotated.size() != host.size()) rep.exit_code = kVerify;
      } else {
        rep.inputs["max_matchings"] = max_matchings;
        rep.results["rotation_components"] = rotation_components(ap, max_matchings);
      }
      rep.results["wall_time_ms"] = elapsed_ms(t0);
    } else if (*ftilde) {
      rep.command = "ftilde";
      const Graph f = load_graph(pattern_arg);
      rep.inputs = {{"pattern", to_graph6(f)}, {"pad", pad}, {"dedup", dedup}};
      const Graph ft = build_f_tilde(f, pad, dedup);
      const Rational gf = gamma_min_ratio(f).value;
      const Rational gft = gamma_min_ratio(ft).value;
      rep.results = {{"graph", to_graph6(ft)},
                     {"order", ft.order()},
                     {"size", ft.size()},
                     {"gamma_f", to_string(gf)},
                     {"gamma_f_tilde", to_string(gft)},
                     {"wall_time_ms", elapsed_ms(t0)}};
      if (gf != gft) rep.exit_code = kVerify;
    } else if (*table) {
      rep.command = "expander table";
      rep.inputs = {{"r", r}};
      auto t = verify_table(r);
      rep.results = t.to_json();
      rep.results["wall_time_ms"] = elapsed_ms(t0);
      if (!t.all_pass()) rep.exit_code = kVerify;
    } else if (*check) {
      rep.command = "expander check";
      const Rational alpha = parse_rational(alpha_arg);
      rep.inputs = {{"alpha", to_string(alpha)}, {"r", r}};
      if (!eta_arg.empty()) {
        const Rational eta = parse_rational(eta_arg);
        rep.inputs["eta"] = to_string(eta);
        auto v = condition_value(alpha, r, eta);
        rep.results = {{"lhs", v.lhs.to_string()},
                       {"rhs", v.rhs.to_string()},
                       {"margin", v.margin.to_string()},
                       {"holds", v.holds()},
                       {"expansion", to_string((1 - eta) * r * (1 - alpha))}};
      } else {
        auto e = best_eta(alpha, r);
        rep.results = {{"eta", to_string(e.eta)},
                       {"eta_decimal", e.eta.get_d()},
                       {"expansion", to_string(e.expansion)},
                       {"expansion_decimal", e.expansion.get_d()}};
      }
    } else if (*sample) {
      rep.command = "expander sample";
      rep.inputs = {{"r", r}, {"n", sample_n}};
      std::mt19937_64 rng(seed);
      std::size_t attempts = 0;
      const Graph g = sample_regular_graph(r, sample_n, rng, 1'000'000, &attempts);
      rep.results = {{"graph", to_graph6(g)}, {"attempts", attempts}};
      if (with_i_alpha) {
        const Rational alpha = parse_rational(alpha_arg);
        rep.inputs["alpha"] = to_string(alpha);
        auto ia = i_alpha_exact(g, alpha);
        rep.results["i_alpha"] = to_string(ia.value);
        rep.results["witness"] = ia.witness;
      }
    }
  } catch (const BudgetExceeded& e) {
    rep.results["conclusive"] = false;
    rep.results["error"] = e.what();
    rep.exit_code = kBudget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ActivationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerify;
  }

  json report = {{"command", rep.command},
                 {"inputs", rep.inputs},
                 {"results", rep.results},
                 {"provenance", {{"tool", "wsatlab"}, {"version", kVersion}, {"seed", seed}}}};
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
    f << text;
  }
  return rep.exit_code;
}
