#include "liardom/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace liardom {

namespace {

using Mask = std::uint64_t;

struct CoverConstraint {
  Mask mask = 0;
  int required = 0;
};

// Covering search over a relabelled candidate space: bit b is the b-th
// candidate in branching order, so the lowest set bit is always the next one
// to try.
class CoverSearch {
 public:
  CoverSearch(std::vector<CoverConstraint> constraints, int bits, std::uint64_t budget)
      : constraints_(std::move(constraints)), bits_(bits), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  bool trivially_infeasible() const {
    return std::any_of(constraints_.begin(), constraints_.end(), [](const CoverConstraint& c) {
      return std::popcount(c.mask) < c.required;
    });
  }

  std::optional<Mask> solve(int lower_bound) {
    if (trivially_infeasible()) return std::nullopt;
    for (auto& c : constraints_) lower_bound = std::max(lower_bound, c.required);
    for (int bound = std::max(lower_bound, 0); bound <= bits_; ++bound) {
      bound_ = bound;
      if (auto found = descend(0, 0, 0)) return found;
    }
    return std::nullopt;
  }

 private:
  std::optional<Mask> descend(Mask chosen, Mask excluded, int used) {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);

    const Mask open = ~chosen & ~excluded;
    int worst = 0;
    std::size_t branch_on = 0;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      const auto& c = constraints_[i];
      const int deficit = c.required - std::popcount(c.mask & chosen);
      if (deficit <= 0) continue;
      if (deficit > std::popcount(c.mask & open)) return std::nullopt;
      if (deficit > worst) {
        worst = deficit;
        branch_on = i;
      }
    }
    if (worst == 0) return chosen;
    if (used + worst > bound_) return std::nullopt;

    Mask pending = constraints_[branch_on].mask & open;
    Mask tried = 0;
    while (pending) {
      const Mask pick = pending & (~pending + 1);
      pending ^= pick;
      if (auto found = descend(chosen | pick, excluded | tried, used + 1)) return found;
      tried |= pick;
    }
    return std::nullopt;
  }

  std::vector<CoverConstraint> constraints_;
  int bits_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int bound_ = 0;
};

// Candidate relabelling: descending degree in g, then ascending index.
struct CandidateSpace {
  std::vector<Vertex> by_bit;   // bit -> vertex of g
  std::vector<int> bit_of;      // vertex of g -> bit, -1 when not a candidate

  CandidateSpace(const Graph& g, std::span<const Vertex> candidates) : bit_of(g.size(), -1) {
    if (candidates.size() > kMaxExactVertices) {
      throw std::invalid_argument("exact solver supports at most " +
                                  std::to_string(kMaxExactVertices) + " candidate vertices, got " +
                                  std::to_string(candidates.size()));
    }
    by_bit.assign(candidates.begin(), candidates.end());
    std::sort(by_bit.begin(), by_bit.end(), [&](Vertex a, Vertex b) {
      const auto da = g.degree(a);
      const auto db = g.degree(b);
      if (da != db) return da > db;
      return a < b;
    });
    by_bit.erase(std::unique(by_bit.begin(), by_bit.end()), by_bit.end());
    for (std::size_t b = 0; b < by_bit.size(); ++b) bit_of[static_cast<std::size_t>(by_bit[b])] = static_cast<int>(b);
  }

  Mask closed_mask(const Graph& g, Vertex v) const {
    Mask m = 0;
    auto add = [&](Vertex w) {
      const int b = bit_of[static_cast<std::size_t>(w)];
      if (b >= 0) m |= Mask{1} << b;
    };
    add(v);
    for (Vertex w : g.neighbors(v)) add(w);
    return m;
  }

  VertexSet decode(Mask m) const {
    VertexSet out;
    while (m) {
      out.push_back(by_bit[static_cast<std::size_t>(std::countr_zero(m))]);
      m &= m - 1;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

template <class Build>
ExactResult run(const Graph& g, std::span<const Vertex> candidates, ProblemKind kind, int k,
                int lower_bound, const ExactOptions& options, Build build_constraints) {
  const auto start = std::chrono::steady_clock::now();
  CandidateSpace space(g, candidates);
  CoverSearch search(build_constraints(space), static_cast<int>(space.by_bit.size()),
                     options.node_budget);
  ExactResult result;
  if (auto found = search.solve(lower_bound)) {
    result.optimum = std::popcount(*found);
    result.witness = make_solution(kind, k, space.decode(*found));
    result.witness->meta["nodes_explored"] = static_cast<std::int64_t>(search.nodes());
  }
  result.nodes_explored = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<CoverConstraint> tuple_constraints(const Graph& g, const CandidateSpace& space,
                                               std::span<const Vertex> targets, int k) {
  std::vector<CoverConstraint> cs;
  cs.reserve(targets.size());
  for (Vertex t : targets) cs.push_back({space.closed_mask(g, t), k});
  return cs;
}

}  // namespace

ExactResult exact_min_kds(const Graph& g, int k, const ExactOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto vertices = all_vertices(g);
  return run(g, vertices, ProblemKind::kds, k, 0,
             options, [&](const CandidateSpace& space) { return tuple_constraints(g, space, vertices, k); });
}

ExactResult exact_min_ds(const Graph& g, const ExactOptions& options) {
  auto result = exact_min_kds(g, 1, options);
  if (result.witness) {
    auto meta = std::move(result.witness->meta);
    result.witness = make_solution(ProblemKind::ds, 1, std::move(result.witness->vertices));
    result.witness->meta = std::move(meta);
  }
  return result;
}

ExactResult exact_min_kds_restricted(const Graph& g, int k, std::span<const Vertex> targets,
                                     std::span<const Vertex> candidates,
                                     const ExactOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (Vertex t : targets) {
    if (!g.contains(t)) throw std::out_of_range("target vertex out of range");
  }
  return run(g, candidates, ProblemKind::kds, k, 0, options,
             [&](const CandidateSpace& space) { return tuple_constraints(g, space, targets, k); });
}

ExactResult exact_min_lds(const Graph& g, const ExactOptions& options) {
  const auto vertices = all_vertices(g);
  auto build = [&](const CandidateSpace& space) {
    std::vector<Mask> closed(g.size());
    for (Vertex v : vertices) closed[static_cast<std::size_t>(v)] = space.closed_mask(g, v);
    std::vector<CoverConstraint> cs;
    for (Mask m : closed) cs.push_back({m, 2});
    // Pairs with disjoint closed neighbourhoods are implied by the vertex
    // constraints (2 + 2 >= 3).
    for (std::size_t u = 0; u < closed.size(); ++u) {
      for (std::size_t v = u + 1; v < closed.size(); ++v) {
        if (closed[u] & closed[v]) cs.push_back({closed[u] | closed[v], 3});
      }
    }
    return cs;
  };
  // A pair condition forces |L| >= 3 whenever there are two vertices; a single
  // vertex can never be doubly dominated, which the search reports itself.
  return run(g, vertices, ProblemKind::lds, 1, g.size() >= 2 ? 3 : 0, options, build);
}

}  // namespace liardom
