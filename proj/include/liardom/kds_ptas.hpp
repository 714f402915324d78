#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liardom/exact.hpp"
#include "liardom/graph.hpp"
#include "liardom/solution.hpp"

namespace liardom {

struct PtasConfig {
  double epsilon = 1.0;
  /// Abort when a seed's expansion radius would exceed this.
  std::optional<int> neighborhood_cap;
  ExactOptions subsolver;

  /// Growth threshold; expansion continues while D_k(N^{r+2}) > rho * D_k(N^r).
  double rho() const { return 1.0 + epsilon; }
};

class NeighborhoodCapExceeded : public std::runtime_error {
 public:
  NeighborhoodCapExceeded(Vertex seed, int cap)
      : std::runtime_error("expansion around vertex " + std::to_string(seed) +
                           " exceeded radius cap " + std::to_string(cap)),
        seed_(seed) {}
  Vertex seed() const { return seed_; }

 private:
  Vertex seed_;
};

/// One growth step: the ball radius and its local optimum (empty = no
/// k-tuple dominating set inside the induced ball).
struct GrowthStep {
  int radius = 0;
  std::optional<int> local_optimum;

  friend bool operator==(const GrowthStep&, const GrowthStep&) = default;
};

struct ExpansionRecord {
  Vertex seed = -1;
  int r_hat = 0;
  VertexSet inner_set;       // N^{r_hat}[seed] within the remaining vertices
  VertexSet outer_set;       // N^{r_hat+2}[seed] within the remaining vertices; removed afterwards
  VertexSet local_solution;  // committed k-tuple dominating set for outer_set
  /// True when the induced outer set had no k-tuple dominating set and the
  /// local solution was drawn from the outer set's neighbourhood in the full
  /// graph instead.
  bool borrowed = false;
  std::vector<GrowthStep> growth;

  friend bool operator==(const ExpansionRecord&, const ExpansionRecord&) = default;
};

struct ExpansionTrace {
  int k = 1;
  double epsilon = 1.0;
  std::vector<ExpansionRecord> records;

  int max_r_hat() const;
  std::vector<VertexSet> inner_sets() const;

  friend bool operator==(const ExpansionTrace&, const ExpansionTrace&) = default;
};

struct PtasResult {
  Solution solution;
  ExpansionTrace trace;
};

/// BFS ball: all vertices within hop distance r of v. Throws for invalid v or
/// negative r.
VertexSet rth_closed_neighborhood(const Graph& g, Vertex v, int r);

/// k-tuple domination by iterated neighbourhood expansion.
///
/// While vertices remain, the smallest remaining vertex v seeds a ball. With
/// hop distances measured in g and balls restricted to the remaining
/// vertices, r grows from 0 while D_k(N^{r+2}[v]) > rho * D_k(N^r[v]), where
/// D_k(W) is the exact optimum on the subgraph induced by W. A ball without
/// any k-tuple dominating set counts as still growing. At the stopping radius
/// r_hat the optimum for N^{r_hat+2}[v] is committed and that ball removed.
/// If the ball has stopped growing but is still infeasible on its own, its
/// vertices are dominated from their neighbourhood in g (see
/// ExpansionRecord::borrowed).
///
/// Throws InfeasibleInstance, BudgetExceeded or NeighborhoodCapExceeded.
PtasResult ptas_kds(const Graph& g, int k, const PtasConfig& config);

/// First pair (u, v), u from an earlier set than v, with hop distance <= 2.
std::optional<std::pair<Vertex, Vertex>> check_two_separated(const Graph& g,
                                                             std::span<const VertexSet> sets);

/// Local-size bound for a committed local solution: |D| <= (2r+1)^2 * k^2
/// with r = r_hat + 2, the radius of the ball it dominates.
bool local_size_bound_holds(const ExpansionRecord& record, int k);
long long local_size_bound(int r, int k);

struct LowerBoundReport {
  int optimum = 0;                 // gamma_k(g)
  std::vector<int> inner_optima;   // per inner set
  int inner_sum = 0;
  bool holds = false;              // optimum >= inner_sum
  /// Same sum with every S_i measured by the cheapest subset of N[S_i] that
  /// k-dominates it. Pairwise 2-separated sets have disjoint N[S_i], so this
  /// sum never exceeds gamma_k; the induced measure above can.
  std::vector<int> neighborhood_optima;
  int neighborhood_sum = 0;
  bool neighborhood_holds = false;
};

/// Checks gamma_k(g) >= sum_i D_k(S_i) over the trace's inner sets, with
/// D_k(S_i) taken on the induced subgraph. An inner set with no k-tuple
/// dominating set of its own is measured by the cheapest set drawn from N[S_i]
/// that k-dominates S_i instead. Throws BudgetExceeded.
LowerBoundReport lower_bound_check(const Graph& g, int k, const ExpansionTrace& trace,
                                   const ExactOptions& options = {});

}  // namespace liardom
