#include "liardom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace liardom {

PointSet::PointSet(std::vector<Point2D> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

const Point2D& PointSet::at(Vertex i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= points_.size()) {
    throw std::out_of_range("point index " + std::to_string(i) + " out of range");
  }
  return points_[static_cast<std::size_t>(i)];
}

std::vector<Vertex> sort_by_x(const PointSet& ps) {
  std::vector<Vertex> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const auto& pa = ps[a];
    const auto& pb = ps[b];
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return a < b;
  });
  return order;
}

Graph build_udg(const PointSet& ps) {
  // x-sorted sweep: only pairs with |dx| <= 1 can be adjacent.
  const auto order = sort_by_x(ps);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& p = ps[order[i]];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& q = ps[order[j]];
      if (q.x - p.x > 1.0) break;
      if (within(p, q, CoverageRadius::one)) {
        edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
      }
    }
  }
  return Graph::from_edges(ps.size(), edges);
}

CoverageSet coverage(const PointSet& ps, Vertex center, CoverageRadius radius) {
  const auto& c = ps.at(center);
  CoverageSet out{center, radius, {}};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (within(c, ps[static_cast<Vertex>(i)], radius)) out.members.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace liardom
