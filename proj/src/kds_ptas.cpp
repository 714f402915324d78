#include "liardom/kds_ptas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "liardom/domination.hpp"

namespace liardom {

int ExpansionTrace::max_r_hat() const {
  int best = 0;
  for (const auto& rec : records) best = std::max(best, rec.r_hat);
  return best;
}

std::vector<VertexSet> ExpansionTrace::inner_sets() const {
  std::vector<VertexSet> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back(rec.inner_set);
  return out;
}

VertexSet rth_closed_neighborhood(const Graph& g, Vertex v, int r) {
  if (r < 0) throw std::invalid_argument("radius must be >= 0");
  if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const auto dist = bfs_distances(g, v);
  VertexSet out;
  for (std::size_t u = 0; u < dist.size(); ++u) {
    if (dist[u] >= 0 && dist[u] <= r) out.push_back(static_cast<Vertex>(u));
  }
  return out;
}

namespace {

VertexSet closed_union(const Graph& g, std::span<const Vertex> set) {
  VertexSet out;
  for (Vertex v : set) {
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet lift(std::span<const Vertex> local_to_global, const VertexSet& local) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(local_to_global[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

long long local_size_bound(int r, int k) {
  const long long side = 2LL * r + 1;
  return side * side * static_cast<long long>(k) * k;
}

bool local_size_bound_holds(const ExpansionRecord& record, int k) {
  return static_cast<long long>(record.local_solution.size()) <= local_size_bound(record.r_hat + 2, k);
}

PtasResult ptas_kds(const Graph& g, int k, const PtasConfig& config) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (auto why = kds_feasible(g, k)) throw InfeasibleInstance(*why);

  const auto n = g.size();
  const double rho = config.rho();
  std::vector<char> remaining(n, 1);
  VertexSet chosen;
  PtasResult result;
  result.trace.k = k;
  result.trace.epsilon = config.epsilon;
  int borrowed = 0;

  for (std::size_t s = 0; s < n; ++s) {
    if (!remaining[s]) continue;
    const auto seed = static_cast<Vertex>(s);
    const auto dist = bfs_distances(g, seed);
    int reach = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (remaining[u] && dist[u] >= 0) reach = std::max(reach, dist[u]);
    }
    auto ball = [&](int r) {
      VertexSet out;
      for (std::size_t u = 0; u < n; ++u) {
        if (remaining[u] && dist[u] >= 0 && dist[u] <= r) out.push_back(static_cast<Vertex>(u));
      }
      return out;
    };

    std::map<int, ExactResult> solved;
    ExpansionRecord rec;
    rec.seed = seed;
    auto local = [&](int r) -> const ExactResult& {
      auto it = solved.find(r);
      if (it == solved.end()) {
        it = solved.emplace(r, exact_min_kds(g.induced(ball(r)), k, config.subsolver)).first;
        rec.growth.push_back({r, it->second.optimum});
      }
      return it->second;
    };

    int r = 0;
    while (true) {
      if (config.neighborhood_cap && r > *config.neighborhood_cap) {
        throw NeighborhoodCapExceeded(seed, *config.neighborhood_cap);
      }
      const auto& inner = local(r);
      const auto& outer = local(r + 2);
      if (inner.feasible() && outer.feasible() &&
          static_cast<double>(*outer.optimum) <= rho * static_cast<double>(*inner.optimum)) {
        break;
      }
      // Once the ball has absorbed everything reachable it can no longer grow.
      if (r >= reach) break;
      ++r;
    }

    rec.r_hat = r;
    rec.inner_set = ball(r);
    rec.outer_set = ball(r + 2);
    const auto& committed = local(r + 2);
    if (committed.feasible()) {
      rec.local_solution = lift(rec.outer_set, committed.witness->vertices);
    } else {
      const auto candidates = closed_union(g, rec.outer_set);
      auto fallback = exact_min_kds_restricted(g, k, rec.outer_set, candidates, config.subsolver);
      if (!fallback.feasible()) {
        // Unreachable after the kds_feasible gate; kept as a hard failure.
        throw InfeasibleInstance(Violation{ViolationKind::infeasible_vertex, seed, -1, 0, k});
      }
      rec.local_solution = fallback.witness->vertices;
      rec.borrowed = true;
      ++borrowed;
    }
    std::sort(rec.growth.begin(), rec.growth.end(),
              [](const GrowthStep& a, const GrowthStep& b) { return a.radius < b.radius; });

    for (Vertex v : rec.outer_set) remaining[static_cast<std::size_t>(v)] = 0;
    chosen.insert(chosen.end(), rec.local_solution.begin(), rec.local_solution.end());
    result.trace.records.push_back(std::move(rec));
  }

  result.solution = make_solution(ProblemKind::kds, k, std::move(chosen));
  result.solution.meta["iterations"] = static_cast<std::int64_t>(result.trace.records.size());
  result.solution.meta["max_r_hat"] = result.trace.max_r_hat();
  result.solution.meta["borrowed"] = borrowed;
  return result;
}

std::optional<std::pair<Vertex, Vertex>> check_two_separated(const Graph& g,
                                                             std::span<const VertexSet> sets) {
  std::vector<std::vector<int>> owners(g.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) owners.at(static_cast<std::size_t>(v)).push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex u : sets[i]) {
      VertexSet near{u};
      for (Vertex w : g.neighbors(u)) {
        near.push_back(w);
        for (Vertex x : g.neighbors(w)) near.push_back(x);
      }
      std::sort(near.begin(), near.end());
      near.erase(std::unique(near.begin(), near.end()), near.end());
      for (Vertex w : near) {
        for (int j : owners[static_cast<std::size_t>(w)]) {
          if (j > static_cast<int>(i)) return std::make_pair(u, w);
        }
      }
    }
  }
  return std::nullopt;
}

LowerBoundReport lower_bound_check(const Graph& g, int k, const ExpansionTrace& trace,
                                   const ExactOptions& options) {
  LowerBoundReport report;
  const auto global = exact_min_kds(g, k, options);
  if (!global.feasible()) throw InfeasibleInstance(kds_feasible(g, k).value_or(Violation{}));
  report.optimum = *global.optimum;
  for (const auto& set : trace.inner_sets()) {
    auto local = exact_min_kds(g.induced(set), k, options);
    if (!local.feasible()) {
      local = exact_min_kds_restricted(g, k, set, closed_union(g, set), options);
    }
    const int value = local.optimum.value_or(0);
    report.inner_optima.push_back(value);
    report.inner_sum += value;
    const auto wide = exact_min_kds_restricted(g, k, set, closed_union(g, set), options);
    report.neighborhood_optima.push_back(wide.optimum.value_or(0));
    report.neighborhood_sum += wide.optimum.value_or(0);
  }
  report.holds = report.optimum >= report.inner_sum;
  report.neighborhood_holds = report.optimum >= report.neighborhood_sum;
  return report;
}

}  // namespace liardom
