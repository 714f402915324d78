#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liardom/exact.hpp"
#include "liardom/instances.hpp"
#include "liardom/lds_approx.hpp"
#include "liardom/report.hpp"

namespace liardom {

enum class Regime { dense, sparse, clustered };

const char* to_string(Regime regime);

/// Box side for a regime: 0.3 * sqrt(n) dense, 0.7 * sqrt(n) sparse and
/// sqrt(n) clustered. Only the clustered regime uses PointMode::clustered.
double regime_box(Regime regime, std::size_t n);

struct BenchInstance {
  std::string id;
  Regime regime = Regime::dense;
  GenSpec spec;
};

struct BenchConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 14;
  std::size_t instances = 200;
  std::uint64_t seed = 0;
  /// Solve each instance exactly and fill opt/ratio. Needs n_max <= 64.
  bool oracle = true;
  LdsApproxOptions approx;
  ExactOptions exact;
  int max_retries = 100000;
};

/// Deterministic instance list: instance i cycles dense/sparse/clustered, draws n
/// uniformly from [n_min, n_max] and gets its own seed, all from `seed`.
std::vector<BenchInstance> bench_instances(const BenchConfig& config);

struct BenchRow {
  BenchInstance instance;
  RunReport report;
  LdsApproxResult result;
  bool valid = false;  // final output passes check_lds
};

/// Runs the LDS sweep on every instance. The report's size is the sweep
/// output before repair; repair holds the number of vertices repair added.
/// `on_row` (optional) sees each row as soon as it is finished.
std::vector<BenchRow> run_ratio_bench(const BenchConfig& config,
                                      const std::function<void(const BenchRow&)>& on_row = {});

}  // namespace liardom
