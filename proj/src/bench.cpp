#include "liardom/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "liardom/domination.hpp"
#include "liardom/geometry.hpp"

namespace liardom {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::dense: return "dense";
    case Regime::sparse: return "sparse";
    case Regime::clustered: return "clustered";
  }
  return "?";
}

double regime_box(Regime regime, std::size_t n) {
  const double root = std::sqrt(static_cast<double>(n));
  switch (regime) {
    case Regime::dense: return 0.3 * root;
    case Regime::sparse: return 0.7 * root;
    case Regime::clustered: return root;
  }
  return root;
}

std::vector<BenchInstance> bench_instances(const BenchConfig& config) {
  if (config.n_min < 3 || config.n_max < config.n_min) {
    throw std::invalid_argument("need 3 <= n_min <= n_max");
  }
  Rng rng(config.seed);
  std::vector<BenchInstance> out;
  const std::uint64_t span = config.n_max - config.n_min + 1;
  for (std::size_t i = 0; i < config.instances; ++i) {
    BenchInstance inst;
    inst.regime = static_cast<Regime>(i % 3);
    inst.spec.n = config.n_min + static_cast<std::size_t>(rng.below(span));
    inst.spec.box = regime_box(inst.regime, inst.spec.n);
    inst.spec.mode = inst.regime == Regime::clustered ? PointMode::clustered : PointMode::uniform;
    inst.spec.seed = rng.next();
    inst.spec.feasibility = Feasibility::lds;
    inst.spec.max_retries = config.max_retries;
    char id[64];
    std::snprintf(id, sizeof id, "i%05zu-%s-n%zu", i, to_string(inst.regime), inst.spec.n);
    inst.id = id;
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<BenchRow> run_ratio_bench(const BenchConfig& config,
                                      const std::function<void(const BenchRow&)>& on_row) {
  if (config.oracle && config.n_max > kMaxExactVertices) {
    throw std::invalid_argument("oracle runs need n_max <= " + std::to_string(kMaxExactVertices));
  }
  std::vector<BenchRow> rows;
  for (auto& inst : bench_instances(config)) {
    BenchRow row;
    const auto ps = gen_points(inst.spec);
    const auto g = build_udg(ps);
    const auto start = std::chrono::steady_clock::now();
    row.result = approximate_lds(ps, config.approx);
    const std::chrono::duration<double, std::milli> wall = std::chrono::steady_clock::now() - start;
    row.valid = !check_lds(g, row.result.solution.vertices);

    auto& rep = row.report;
    rep.instance = inst.id;
    rep.solver = "lds-approx";
    rep.n = ps.size();
    rep.size = row.result.sweep_output.size();
    rep.repair = row.result.stats.repair_added;
    rep.wall_ms = wall.count();
    rep.max_iter_add = row.result.stats.max_added_per_iteration;
    if (config.oracle) rep.opt = exact_min_lds(g, config.exact).optimum;
    row.instance = std::move(inst);
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace liardom
