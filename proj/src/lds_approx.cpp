#include "liardom/lds_approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "liardom/domination.hpp"

namespace liardom {

SweepCoverage::SweepCoverage(const PointSet& ps)
    : ps_(&ps), order_(sort_by_x(ps)), rank_(ps.size()), active_(ps.size(), 1) {
  sorted_x_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    rank_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    sorted_x_.push_back(ps[order_[i]].x);
  }
}

VertexSet SweepCoverage::query(Vertex center, CoverageRadius radius) const {
  const auto& c = ps_->at(center);
  const double reach = radius == CoverageRadius::half ? 0.5 : radius == CoverageRadius::one ? 1.0 : 1.5;
  auto first = std::lower_bound(sorted_x_.begin(), sorted_x_.end(), c.x - reach);
  VertexSet out;
  for (auto it = first; it != sorted_x_.end() && *it <= c.x + reach; ++it) {
    const Vertex v = order_[static_cast<std::size_t>(it - sorted_x_.begin())];
    if (active(v) && within(c, (*ps_)[v], radius)) out.push_back(v);
  }
  return out;
}

SelectPointResult select_point_case2(const SweepCoverage& coverage, Vertex p_left,
                                     std::span<const Vertex> cov_half,
                                     std::span<const Vertex> cov_one) {
  SelectPointResult out;
  out.members.push_back(p_left);
  auto take_first = [&](std::span<const Vertex> from, auto&& allowed, int wanted) {
    for (Vertex v : from) {
      if (wanted == 0) break;
      if (allowed(v) && std::find(out.members.begin(), out.members.end(), v) == out.members.end()) {
        out.members.push_back(v);
        --wanted;
      }
    }
    out.shortfall += wanted;
  };
  auto contains = [](std::span<const Vertex> set, Vertex v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };

  if (cov_half.size() >= 3) {
    take_first(cov_half, [&](Vertex v) { return v != p_left; }, 2);
  } else if (cov_half.size() == 2) {
    const Vertex p_x = cov_half[0] == p_left ? cov_half[1] : cov_half[0];
    out.members.push_back(p_x);
    const auto x_one = coverage.query(p_x, CoverageRadius::one);
    auto outside_pair = [&](Vertex v) { return v != p_left && v != p_x; };
    auto common = [&](Vertex v) { return outside_pair(v) && contains(x_one, v); };
    if (std::any_of(cov_one.begin(), cov_one.end(), common)) {
      take_first(cov_one, common, 1);
    } else {
      take_first(cov_one, outside_pair, 1);
      take_first(x_one, outside_pair, 1);
    }
  } else {
    take_first(cov_one, [&](Vertex v) { return !contains(cov_half, v); }, 2);
  }
  return out;
}

VertexSet repair_lds(const Graph& g, const VertexSet& chosen) {
  const auto n = g.size();
  std::vector<char> in(n, 0);
  for (Vertex v : chosen) in[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<Vertex>> closed(n);
  for (std::size_t v = 0; v < n; ++v) closed[v] = closed_neighborhood(g, static_cast<Vertex>(v));

  VertexSet added;
  std::vector<int> count(n), gain(n), stamp(n, -1);
  int stamp_id = 0;
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      count[v] = 0;
      for (Vertex w : closed[v]) count[v] += in[static_cast<std::size_t>(w)];
    }
    std::fill(gain.begin(), gain.end(), 0);
    bool violated = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (count[v] >= 2) continue;
      violated = true;
      for (Vertex w : closed[v]) gain[static_cast<std::size_t>(w)] += 1;
    }
    // A pair can only be short if both members see at most two chosen vertices.
    std::vector<Vertex> low;
    for (std::size_t v = 0; v < n; ++v) {
      if (count[v] <= 2) low.push_back(static_cast<Vertex>(v));
    }
    for (std::size_t i = 0; i < low.size(); ++i) {
      for (std::size_t j = i + 1; j < low.size(); ++j) {
        const auto& nu = closed[static_cast<std::size_t>(low[i])];
        const auto& nv = closed[static_cast<std::size_t>(low[j])];
        ++stamp_id;
        int united = 0;
        std::vector<Vertex> members;
        for (const auto* list : {&nu, &nv}) {
          for (Vertex w : *list) {
            if (stamp[static_cast<std::size_t>(w)] == stamp_id) continue;
            stamp[static_cast<std::size_t>(w)] = stamp_id;
            members.push_back(w);
            united += in[static_cast<std::size_t>(w)];
          }
        }
        if (united >= 3) continue;
        violated = true;
        for (Vertex w : members) gain[static_cast<std::size_t>(w)] += 1;
      }
    }
    if (!violated) break;

    Vertex best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (in[v] || gain[v] == 0) continue;
      if (best < 0 || gain[v] > gain[static_cast<std::size_t>(best)]) best = static_cast<Vertex>(v);
    }
    if (best < 0) {
      auto why = check_lds(g, chosen);
      throw InfeasibleInstance(why.value_or(Violation{}));
    }
    in[static_cast<std::size_t>(best)] = 1;
    added.push_back(best);
  }
  return added;
}

LdsApproxResult approximate_lds(const PointSet& ps, const LdsApproxOptions& options) {
  if (ps.size() < 3) throw std::invalid_argument("liar's domination needs at least 3 points");
  const Graph g = build_udg(ps);
  if (auto why = lds_feasible(g)) throw InfeasibleInstance(*why);

  const auto n = ps.size();
  SweepCoverage coverage(ps);
  std::vector<char> remaining(n, 1);
  std::vector<char> chosen(n, 0);
  VertexSet output;

  LdsApproxResult result;
  auto& stats = result.stats;
  std::size_t cursor = 0;
  const auto& order = coverage.order();

  while (true) {
    while (cursor < n && !remaining[static_cast<std::size_t>(order[cursor])]) ++cursor;
    if (cursor == n) break;
    const Vertex p_left = order[cursor];

    IterationRecord rec;
    rec.p_left = p_left;
    auto choose = [&](Vertex v) {
      if (chosen[static_cast<std::size_t>(v)]) return;
      chosen[static_cast<std::size_t>(v)] = 1;
      output.push_back(v);
      rec.added.push_back(v);
    };
    choose(p_left);

    const auto half = coverage.query(p_left, CoverageRadius::half);
    const auto one = coverage.query(p_left, CoverageRadius::one);
    const auto outer = coverage.query(p_left, CoverageRadius::three_halves);

    std::vector<char> in_half(n, 0);
    for (Vertex v : half) in_half[static_cast<std::size_t>(v)] = 1;
    std::vector<char> in_q(n, 0);
    VertexSet annulus;
    for (Vertex v : outer) {
      if (!in_half[static_cast<std::size_t>(v)]) {
        annulus.push_back(v);
        in_q[static_cast<std::size_t>(v)] = 1;
      }
    }

    for (Vertex q : annulus) {
      if (!in_q[static_cast<std::size_t>(q)]) continue;
      const auto q_one = coverage.query(q, CoverageRadius::one);
      int picked = 0;
      for (Vertex s : q_one) {
        if (in_half[static_cast<std::size_t>(s)] && picked < 2) {
          choose(s);
          ++picked;
        }
      }
      if (picked == 0) continue;
      rec.annulus_phase = true;
      rec.t += picked;
      for (Vertex w : q_one) in_q[static_cast<std::size_t>(w)] = 0;
    }
    if (rec.annulus_phase) ++stats.case1_entries;

    if (rec.t < 2) {
      ++stats.case2_entries;
      rec.select_phase = true;
      auto selected = select_point_case2(coverage, p_left, half, one);
      for (Vertex v : selected.members) choose(v);
      rec.shortfall = selected.shortfall;
      stats.select_shortfall += selected.shortfall;
    }

    for (Vertex v : half) {
      remaining[static_cast<std::size_t>(v)] = 0;
      if (options.universe == CoverageUniverse::remaining) coverage.deactivate(v);
    }
    stats.max_added_per_iteration =
        std::max(stats.max_added_per_iteration, static_cast<int>(rec.added.size()));
    ++stats.iterations;
    result.log.push_back(std::move(rec));
  }

  result.sweep_output = output;
  std::sort(result.sweep_output.begin(), result.sweep_output.end());
  VertexSet final_set = result.sweep_output;
  if (options.repair && check_lds(g, final_set)) {
    const auto added = repair_lds(g, final_set);
    stats.repair_added = static_cast<int>(added.size());
    final_set.insert(final_set.end(), added.begin(), added.end());
  }
  result.solution = make_solution(ProblemKind::lds, 1, std::move(final_set));
  auto& meta = result.solution.meta;
  meta["iterations"] = stats.iterations;
  meta["max_added_per_iteration"] = stats.max_added_per_iteration;
  meta["repair_added"] = stats.repair_added;
  meta["case1_entries"] = stats.case1_entries;
  meta["case2_entries"] = stats.case2_entries;
  meta["select_shortfall"] = stats.select_shortfall;
  meta["sweep_size"] = static_cast<std::int64_t>(result.sweep_output.size());
  return result;
}

}  // namespace liardom
