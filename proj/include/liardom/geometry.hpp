#pragma once

#include <span>
#include <vector>

#include "liardom/graph.hpp"

namespace liardom {

/// Planar point; the unit of length is the disk radius.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline double squared_distance(const Point2D& a, const Point2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Ordered point list; point i keeps index i for the lifetime of the set.
/// Construction rejects non-finite coordinates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point2D> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point2D& operator[](Vertex i) const { return points_[static_cast<std::size_t>(i)]; }
  const Point2D& at(Vertex i) const;
  std::span<const Point2D> points() const { return points_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point2D> points_;
};

/// The three closed-disk radii used by the sweep: 1/2, 1 and 3/2.
enum class CoverageRadius { half, one, three_halves };

/// Squared radius; all three values are exact in binary floating point.
constexpr double squared_radius(CoverageRadius r) {
  switch (r) {
    case CoverageRadius::half: return 0.25;
    case CoverageRadius::one: return 1.0;
    case CoverageRadius::three_halves: return 2.25;
  }
  return 0.0;
}

/// Closed-disk membership test: dist(a, b) <= r.
inline bool within(const Point2D& a, const Point2D& b, CoverageRadius r) {
  return squared_distance(a, b) <= squared_radius(r);
}

struct CoverageSet {
  Vertex center = 0;
  CoverageRadius radius = CoverageRadius::one;
  VertexSet members;  // ascending point index, always contains center
};

/// Unit disk graph: edge (u, v) iff u != v and dist(u, v) <= 1.
Graph build_udg(const PointSet& ps);

/// Points within closed distance `radius` of `center`, including the center.
/// Throws std::out_of_range for an invalid center.
CoverageSet coverage(const PointSet& ps, Vertex center, CoverageRadius radius);

/// Indices ordered by (x, y, index) ascending.
std::vector<Vertex> sort_by_x(const PointSet& ps);

}  // namespace liardom
