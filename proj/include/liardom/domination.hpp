#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "liardom/graph.hpp"

namespace liardom {

enum class ViolationKind {
  underdominated,     // |N[u] ∩ D| below the per-vertex requirement
  pair,               // |(N[u] ∪ N[v]) ∩ L| < 3
  infeasible_vertex,  // |N[u]| itself is below the requirement
  infeasible_pair,    // |N[u] ∪ N[v]| < 3
};

/// First failing constraint found by a checker. `v` is -1 for single-vertex
/// witnesses.
struct Violation {
  ViolationKind kind = ViolationKind::underdominated;
  Vertex u = -1;
  Vertex v = -1;
  int observed = 0;
  int required = 0;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* to_string(ViolationKind kind);

/// Raised by solvers handed an instance with no feasible solution at all.
class InfeasibleInstance : public std::runtime_error {
 public:
  explicit InfeasibleInstance(Violation violation)
      : std::runtime_error("infeasible instance: " + violation.describe()), violation_(violation) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// N(v) ∪ {v}, sorted.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// All checkers return std::nullopt when the predicate holds. Vertex sets may
// be given in any order; out-of-range members throw std::out_of_range.

/// Every v needs |N[v] ∩ d| >= k. Reports the first violating vertex.
/// Throws std::invalid_argument when k < 1.
std::optional<Violation> check_kds(const Graph& g, std::span<const Vertex> d, int k);

/// Liar's domination: (i) |N[v] ∩ l| >= 2 for all v, then (ii)
/// |(N[u] ∪ N[v]) ∩ l| >= 3 for all u < v. Condition (i) is checked first
/// and witnesses are the lexicographically smallest.
std::optional<Violation> check_lds(const Graph& g, std::span<const Vertex> l);

/// Whether any liar's dominating set exists (equivalently, whether V is one).
std::optional<Violation> lds_feasible(const Graph& g);

/// Whether any k-tuple dominating set exists: min |N[v]| >= k.
std::optional<Violation> kds_feasible(const Graph& g, int k);

}  // namespace liardom
