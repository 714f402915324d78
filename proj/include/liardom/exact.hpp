#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "liardom/graph.hpp"
#include "liardom/solution.hpp"

namespace liardom {

/// Exact solvers work on 64-bit vertex masks.
inline constexpr std::size_t kMaxExactVertices = 64;

struct ExactOptions {
  /// Search nodes allowed before BudgetExceeded is thrown.
  std::uint64_t node_budget = 500'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("exact search budget exceeded (" + std::to_string(budget) + " nodes)"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

struct ExactResult {
  std::optional<int> optimum;       // empty when no feasible solution exists
  std::optional<Solution> witness;  // present iff optimum is
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  bool feasible() const { return optimum.has_value(); }
};

// Minimum-cardinality solvers. Iterative deepening on the solution size;
// inside each bound the search branches on the most deficient constraint
// (first in constraint order on ties), trying candidates by descending degree
// then ascending index. Witnesses are therefore deterministic.
//
// Graphs with more than kMaxExactVertices vertices are rejected with
// std::invalid_argument.

ExactResult exact_min_ds(const Graph& g, const ExactOptions& options = {});

/// Throws std::invalid_argument when k < 1.
ExactResult exact_min_kds(const Graph& g, int k, const ExactOptions& options = {});

ExactResult exact_min_lds(const Graph& g, const ExactOptions& options = {});

/// Smallest D ⊆ candidates with |N_g[t] ∩ D| >= k for every t in targets.
/// The witness is expressed in g's vertex indices and tagged KDS. At most
/// kMaxExactVertices candidates.
ExactResult exact_min_kds_restricted(const Graph& g, int k, std::span<const Vertex> targets,
                                     std::span<const Vertex> candidates,
                                     const ExactOptions& options = {});

}  // namespace liardom
