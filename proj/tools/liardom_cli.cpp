// Command-line front end. Exit status: 0 success, 1 infeasible instance or
// failed verification, 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liardom/bench.hpp"
#include "liardom/domination.hpp"
#include "liardom/exact.hpp"
#include "liardom/gadgets.hpp"
#include "liardom/geometry.hpp"
#include "liardom/instances.hpp"
#include "liardom/io.hpp"
#include "liardom/kds_ptas.hpp"
#include "liardom/lds_approx.hpp"
#include "liardom/solution.hpp"

namespace fs = std::filesystem;
using namespace liardom;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

struct GraphSource {
  std::string graph;
  std::string points;

  void attach(CLI::App* app) {
    auto* g = app->add_option("--graph", graph, "graph file");
    auto* p = app->add_option("--points", points, "point file (unit disk graph)");
    g->excludes(p);
  }
  Graph load() const {
    if (graph.empty() == points.empty()) throw UsageError("exactly one of --graph or --points is required");
    return graph.empty() ? build_udg(load_points(points)) : load_graph(graph);
  }
};

int report_violation(const Violation& v) {
  std::cout << "INVALID " << v.describe() << '\n';
  return 1;
}

struct GenPointsArgs {
  std::size_t n = 0;
  double box = 1.0;
  std::uint64_t seed = 0;
  std::string mode = "uniform";
  std::string require = "none";
  int k = 1;
  int retries = 1000;
  std::string out;
};

int gen_points_cmd(const GenPointsArgs& a) {
  GenSpec spec;
  spec.n = a.n;
  spec.box = a.box;
  spec.seed = a.seed;
  spec.mode = parse_point_mode(a.mode);
  spec.k = a.k;
  spec.max_retries = a.retries;
  if (a.require == "none") {
    spec.feasibility = Feasibility::none;
  } else if (a.require == "lds") {
    spec.feasibility = Feasibility::lds;
  } else if (a.require == "kds") {
    spec.feasibility = Feasibility::kds;
  } else {
    throw UsageError("--require must be none, lds or kds");
  }
  std::ostringstream text;
  text << "# n=" << spec.n << " box=" << format_double(spec.box) << " seed=" << spec.seed
       << " mode=" << a.mode << " require=" << a.require << '\n';
  write_points(text, gen_points(spec));
  emit(a.out, text.str());
  return 0;
}

struct GenGadgetArgs {
  std::string kind;
  std::string bits;
  int row = 1;
  int col = 1;
  int k = 2;
  std::string source;
  std::string out;
  std::string labels;
};

int gen_gadget_cmd(const GenGadgetArgs& a) {
  GadgetGraph gadget{Graph(0), {}};
  switch (parse_gadget_kind(a.kind)) {
    case GadgetKind::lds_index:
    case GadgetKind::kds_index: {
      if (a.bits.empty()) throw UsageError("--bits is required for index gadgets");
      const auto x = BitMatrix::from_string(a.bits);
      gadget = parse_gadget_kind(a.kind) == GadgetKind::lds_index
                   ? build_lds_index_gadget(x, a.row, a.col)
                   : build_kds_index_gadget(x, a.row, a.col, a.k);
      break;
    }
    case GadgetKind::w2:
      if (a.source.empty()) throw UsageError("--source is required for the w2 reduction");
      gadget = build_w2_bipartite_reduction(load_graph(a.source));
      break;
  }
  std::ostringstream graph;
  write_graph(graph, gadget.graph);
  emit(a.out, graph.str());
  if (!a.labels.empty()) {
    std::ostringstream labels;
    write_label_map(labels, gadget);
    write_text_file(a.labels, labels.str());
  }
  return 0;
}

struct SolveExactArgs {
  GraphSource source;
  std::string problem = "lds";
  int k = 1;
  std::uint64_t budget = ExactOptions{}.node_budget;
  std::string out;
};

int solve_exact_cmd(const SolveExactArgs& a) {
  const auto g = a.source.load();
  ExactOptions opts;
  opts.node_budget = a.budget;
  ExactResult r;
  switch (parse_problem_kind(a.problem)) {
    case ProblemKind::ds: r = exact_min_ds(g, opts); break;
    case ProblemKind::kds: r = exact_min_kds(g, a.k, opts); break;
    case ProblemKind::lds: r = exact_min_lds(g, opts); break;
  }
  std::cerr << "nodes_explored=" << r.nodes_explored
            << " elapsed_ms=" << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
  if (!r.feasible()) {
    std::cerr << "infeasible: no solution exists\n";
    return 1;
  }
  emit(a.out, solution_to_json(*r.witness));
  return 0;
}

struct SolveLdsArgs {
  std::string points;
  bool no_repair = false;
  std::string universe = "remaining";
  std::string log;
  std::string stats;
  std::string out;
};

int solve_lds_cmd(const SolveLdsArgs& a) {
  const auto ps = load_points(a.points);
  LdsApproxOptions opts;
  opts.repair = !a.no_repair;
  if (a.universe == "remaining") {
    opts.universe = CoverageUniverse::remaining;
  } else if (a.universe == "original") {
    opts.universe = CoverageUniverse::original;
  } else {
    throw UsageError("--universe must be remaining or original");
  }
  const auto r = approximate_lds(ps, opts);
  if (!a.log.empty()) write_text_file(a.log, iteration_log_to_json(r.log));
  if (!a.stats.empty()) write_text_file(a.stats, stats_to_json(r.stats));
  emit(a.out, solution_to_json(r.solution));
  if (auto why = check_lds(build_udg(ps), r.solution.vertices)) {
    // Only reachable with --no-repair.
    std::cerr << "sweep output is not a liar's dominating set: " << why->describe() << '\n';
    return 1;
  }
  return 0;
}

struct SolvePtasArgs {
  GraphSource source;
  int k = 1;
  double epsilon = 1.0;
  std::optional<int> cap;
  std::string trace;
  std::string out;
};

int solve_ptas_cmd(const SolvePtasArgs& a) {
  const auto g = a.source.load();
  PtasConfig cfg;
  cfg.epsilon = a.epsilon;
  cfg.neighborhood_cap = a.cap;
  const auto r = ptas_kds(g, a.k, cfg);
  if (!a.trace.empty()) write_text_file(a.trace, trace_to_json(r.trace));
  emit(a.out, solution_to_json(r.solution));
  return 0;
}

struct VerifyArgs {
  GraphSource source;
  std::string solution;
};

int verify_cmd(const VerifyArgs& a) {
  const auto g = a.source.load();
  const auto s = load_solution(a.solution);
  for (Vertex v : s.vertices) {
    if (!g.contains(v)) throw UsageError("solution vertex " + std::to_string(v) + " is not in the graph");
  }
  if (auto why = verify(g, s)) return report_violation(*why);
  std::cout << "OK " << to_string(s.kind) << " size=" << s.size() << '\n';
  return 0;
}

struct VerifyGadgetsArgs {
  std::string kind = "lds-index";
  int side = 2;
  int k = 2;
  int max_order = 5;
  bool a_clique = false;
  bool verbose = false;
};

int verify_gadgets_cmd(const VerifyGadgetsArgs& a) {
  ClaimParams params;
  params.side = a.side;
  params.k = a.k;
  params.max_order = a.max_order;
  params.a_clique = a.a_clique;
  const auto report = verify_reduction_claims(parse_gadget_kind(a.kind), params);
  for (const auto& c : report.checks) {
    if (a.verbose || !c.pass) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.instance << " expected=" << c.expected
                << " observed=" << c.observed << '\n';
    }
  }
  std::cout << a.kind << ": " << report.passed() << "/" << report.checks.size() << " pass\n";
  return report.all_passed() ? 0 : 1;
}

struct BenchArgs {
  std::size_t n_min = 3;
  std::size_t n_max = 14;
  std::size_t instances = 200;
  std::uint64_t seed = 0;
  bool no_oracle = false;
  bool no_timing = false;
  std::string out;
};

int ratio_bench_cmd(const BenchArgs& a) {
  BenchConfig cfg;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.instances = a.instances;
  cfg.seed = a.seed;
  cfg.oracle = !a.no_oracle;
  const auto rows = run_ratio_bench(cfg);
  std::vector<RunReport> reports;
  double worst = 0.0;
  int invalid = 0, repaired = 0;
  for (const auto& row : rows) {
    reports.push_back(row.report);
    worst = std::max(worst, row.report.ratio().value_or(0.0));
    invalid += !row.valid;
    repaired += row.report.repair.value_or(0) > 0;
  }
  std::ostringstream csv;
  write_report(csv, reports, CsvOptions{!a.no_timing});
  emit(a.out, csv.str());
  std::cerr << "instances=" << rows.size() << " invalid=" << invalid << " repaired=" << repaired;
  if (cfg.oracle) std::cerr << " max_ratio=" << format_double(worst);
  std::cerr << '\n';
  return invalid == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liar's and k-tuple domination toolkit"};
  app.require_subcommand(1);

  GenPointsArgs gp;
  auto* gen_points_app = app.add_subcommand("gen-points", "sample a seeded point set");
  gen_points_app->add_option("--n", gp.n, "number of points")->required();
  gen_points_app->add_option("--box", gp.box, "side of the sampling square");
  gen_points_app->add_option("--seed", gp.seed, "generator seed")->required();
  gen_points_app->add_option("--mode", gp.mode, "uniform or clustered");
  gen_points_app->add_option("--require", gp.require, "none, lds or kds");
  gen_points_app->add_option("--k", gp.k, "k for --require kds");
  gen_points_app->add_option("--max-retries", gp.retries, "resampling budget");
  gen_points_app->add_option("--out", gp.out, "output file (default stdout)");

  GenGadgetArgs gg;
  auto* gen_gadget_app = app.add_subcommand("gen-gadget", "build a reduction gadget");
  gen_gadget_app->add_option("--kind", gg.kind, "lds-index, kds-index or w2")->required();
  gen_gadget_app->add_option("--bits", gg.bits, "row-major 0/1 matrix, length r*r");
  gen_gadget_app->add_option("--row", gg.row, "index row I (1-based)");
  gen_gadget_app->add_option("--col", gg.col, "index column J (1-based)");
  gen_gadget_app->add_option("--k", gg.k, "k for kds-index");
  gen_gadget_app->add_option("--source", gg.source, "source graph file for w2");
  gen_gadget_app->add_option("--out", gg.out, "graph output file (default stdout)");
  gen_gadget_app->add_option("--labels", gg.labels, "label map output file");

  SolveExactArgs se;
  auto* exact_app = app.add_subcommand("solve-exact", "minimum solution by exhaustive search");
  se.source.attach(exact_app);
  exact_app->add_option("--problem", se.problem, "ds, kds or lds");
  exact_app->add_option("--k", se.k, "k for kds");
  exact_app->add_option("--budget", se.budget, "search node budget");
  exact_app->add_option("--out", se.out, "solution file (default stdout)");

  SolveLdsArgs sl;
  auto* lds_app = app.add_subcommand("solve-lds-approx", "sweep approximation for liar's domination");
  lds_app->add_option("--points", sl.points, "point file")->required();
  lds_app->add_flag("--no-repair", sl.no_repair, "return the raw sweep output");
  lds_app->add_option("--universe", sl.universe, "coverage universe: remaining or original");
  lds_app->add_option("--log", sl.log, "per-iteration log (JSON)");
  lds_app->add_option("--stats", sl.stats, "run statistics (JSON)");
  lds_app->add_option("--out", sl.out, "solution file (default stdout)");

  SolvePtasArgs sp;
  auto* ptas_app = app.add_subcommand("solve-kds-ptas", "neighbourhood-expansion scheme for k-tuple domination");
  sp.source.attach(ptas_app);
  ptas_app->add_option("--k", sp.k, "tuple size")->required();
  ptas_app->add_option("--epsilon", sp.epsilon, "accuracy parameter, > 0");
  ptas_app->add_option("--cap", sp.cap, "maximum expansion radius");
  ptas_app->add_option("--trace", sp.trace, "expansion trace (JSON)");
  ptas_app->add_option("--out", sp.out, "solution file (default stdout)");

  VerifyArgs vf;
  auto* verify_app = app.add_subcommand("verify", "check a solution file against a graph");
  vf.source.attach(verify_app);
  verify_app->add_option("--solution", vf.solution, "solution file")->required();

  VerifyGadgetsArgs vg;
  auto* vg_app = app.add_subcommand("verify-gadgets", "exhaustive oracle sweep of a reduction");
  vg_app->add_option("--kind", vg.kind, "lds-index, kds-index or w2");
  vg_app->add_option("--r", vg.side, "matrix side for index gadgets");
  vg_app->add_option("--k", vg.k, "k for kds-index");
  vg_app->add_option("--max-order", vg.max_order, "largest source graph for w2");
  vg_app->add_flag("--a-clique", vg.a_clique, "join a_1..a_k pairwise (analysis variant)");
  vg_app->add_flag("--verbose", vg.verbose, "print passing checks too");

  BenchArgs rb;
  auto* bench_app = app.add_subcommand("ratio-bench", "sweep ratio against the exact optimum");
  bench_app->add_option("--n-min", rb.n_min, "smallest instance");
  bench_app->add_option("--n-max", rb.n_max, "largest instance");
  bench_app->add_option("--instances", rb.instances, "number of instances");
  bench_app->add_option("--seed", rb.seed, "master seed")->required();
  bench_app->add_flag("--no-oracle", rb.no_oracle, "skip the exact solver");
  bench_app->add_flag("--no-timing", rb.no_timing, "leave wall_ms blank");
  bench_app->add_option("--out", rb.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen_points_app) return gen_points_cmd(gp);
    if (*gen_gadget_app) return gen_gadget_cmd(gg);
    if (*exact_app) return solve_exact_cmd(se);
    if (*lds_app) return solve_lds_cmd(sl);
    if (*ptas_app) return solve_ptas_cmd(sp);
    if (*verify_app) return verify_cmd(vf);
    if (*vg_app) return verify_gadgets_cmd(vg);
    if (*bench_app) return ratio_bench_cmd(rb);
  } catch (const InfeasibleInstance& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const RetryBudgetExhausted& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const NeighborhoodCapExceeded& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
