#pragma once

#include <span>
#include <vector>

#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"
#include "liardom/solution.hpp"

namespace liardom {

/// Which points the sweep's coverage queries see.
enum class CoverageUniverse {
  remaining,  // only points not yet swept away (default)
  original,   // every input point
};

struct LdsApproxOptions {
  bool repair = true;
  CoverageUniverse universe = CoverageUniverse::remaining;
};

/// Closed-disk queries over the points that are still active, with members
/// listed in sweep order (x, then y, then index). Windowed on the x-sorted
/// order, so a query costs O(log n + points in the slab).
class SweepCoverage {
 public:
  explicit SweepCoverage(const PointSet& ps);

  const PointSet& points() const { return *ps_; }
  const std::vector<Vertex>& order() const { return order_; }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }

  bool active(Vertex v) const { return active_[static_cast<std::size_t>(v)] != 0; }
  void deactivate(Vertex v) { active_[static_cast<std::size_t>(v)] = 0; }

  VertexSet query(Vertex center, CoverageRadius radius) const;

 private:
  const PointSet* ps_;
  std::vector<Vertex> order_;
  std::vector<int> rank_;
  std::vector<double> sorted_x_;
  std::vector<char> active_;
};

struct SelectPointResult {
  VertexSet members;  // in selection order, p_left first
  int shortfall = 0;  // required points that did not exist
};

/// Case-2 point selection for a sweep column headed by `p_left`. `cov_half`
/// and `cov_one` are p_left's radius-1/2 and radius-1 coverage, in sweep
/// order. Every "arbitrary" choice takes the earliest point in sweep order.
///
///  - |cov_half| >= 3: p_left plus the first two other points of cov_half.
///  - |cov_half| == 2 (other point p_x): p_left, p_x and the first common
///    unit-neighbour of both; if there is none, the first remaining point of
///    each of their unit disks.
///  - |cov_half| == 1: p_left plus the first two points of cov_one \ cov_half.
///
/// A required point that does not exist is counted in `shortfall` instead of
/// raising; the caller's final verification handles the consequences.
SelectPointResult select_point_case2(const SweepCoverage& coverage, Vertex p_left,
                                     std::span<const Vertex> cov_half,
                                     std::span<const Vertex> cov_one);

struct IterationRecord {
  Vertex p_left = -1;
  VertexSet added;     // newly chosen points, in the order they were chosen
  int t = 0;           // picks credited by the annulus phase
  bool annulus_phase = false;  // some q had S(q) nonempty
  bool select_phase = false;   // select_point_case2 ran
  int shortfall = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct ApproxStats {
  int iterations = 0;
  int max_added_per_iteration = 0;
  int repair_added = 0;
  int case1_entries = 0;
  int case2_entries = 0;
  int select_shortfall = 0;

  friend bool operator==(const ApproxStats&, const ApproxStats&) = default;
};

struct LdsApproxResult {
  Solution solution;       // final output (after repair when enabled)
  VertexSet sweep_output;  // what the sweep itself chose
  ApproxStats stats;
  std::vector<IterationRecord> log;
};

/// Left-to-right sweep for liar's domination on the unit disk graph of `ps`.
///
/// Each column is headed by the leftmost remaining point p_left. Points q in
/// the annulus Cov_{3/2}(p_left) \ Cov_{1/2}(p_left) whose unit disk reaches
/// Cov_{1/2}(p_left) contribute up to two points of that overlap; q's unit
/// disk is then dropped from the annulus. If fewer than two picks were
/// credited, select_point_case2 tops the column up. Cov_{1/2}(p_left) is then
/// swept away.
///
/// Throws std::invalid_argument for fewer than 3 points and
/// InfeasibleInstance when no liar's dominating set exists.
LdsApproxResult approximate_lds(const PointSet& ps, const LdsApproxOptions& options = {});

/// Greedy completion of `chosen` to a liar's dominating set: repeatedly adds
/// the vertex that appears in the most violated constraints (lowest index on
/// ties). Returns the added vertices in order. Throws InfeasibleInstance if no
/// completion exists.
VertexSet repair_lds(const Graph& g, const VertexSet& chosen);

}  // namespace liardom
