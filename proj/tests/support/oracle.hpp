#pragma once

// Brute-force reference implementations. They only read a graph's edge list
// and re-derive everything from the definitions, so they share no code with
// the library's checkers or solvers.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Adjacency {
  int n = 0;
  std::vector<Mask> closed;  // closed neighbourhood of each vertex
};

inline Adjacency adjacency(const liardom::Graph& g) {
  Adjacency a;
  a.n = static_cast<int>(g.size());
  a.closed.resize(g.size());
  for (int v = 0; v < a.n; ++v) a.closed[static_cast<std::size_t>(v)] = Mask{1} << v;
  for (auto [u, v] : g.edges()) {
    a.closed[static_cast<std::size_t>(u)] |= Mask{1} << v;
    a.closed[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return a;
}

inline bool is_kds(const Adjacency& a, Mask d, int k) {
  for (Mask c : a.closed) {
    if (std::popcount(c & d) < k) return false;
  }
  return true;
}

// Every pair of distinct vertices, no shortcuts.
inline bool is_lds(const Adjacency& a, Mask l) {
  if (!is_kds(a, l, 2)) return false;
  for (int u = 0; u < a.n; ++u) {
    for (int v = u + 1; v < a.n; ++v) {
      if (std::popcount((a.closed[static_cast<std::size_t>(u)] | a.closed[static_cast<std::size_t>(v)]) & l) < 3) {
        return false;
      }
    }
  }
  return true;
}

inline Mask to_mask(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) m |= Mask{1} << v;
  return m;
}

// Minimum popcount over all 2^n subsets accepted by `accept`.
template <typename Accept>
std::optional<int> min_subset(int n, Accept&& accept) {
  std::optional<int> best;
  const Mask total = Mask{1} << n;
  for (Mask m = 0; m < total; ++m) {
    const int size = std::popcount(m);
    if (best && size >= *best) continue;
    if (accept(m)) best = size;
  }
  return best;
}

inline std::optional<int> min_kds(const liardom::Graph& g, int k) {
  const auto a = adjacency(g);
  return min_subset(a.n, [&](Mask m) { return is_kds(a, m, k); });
}

inline std::optional<int> min_lds(const liardom::Graph& g) {
  const auto a = adjacency(g);
  return min_subset(a.n, [&](Mask m) { return is_lds(a, m); });
}

// All-pairs hop distances by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<int>> hop_distances(const liardom::Graph& g) {
  const int n = static_cast<int>(g.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (auto [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t w = 0; w < d.size(); ++w)
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d[i][w] + d[w][j] < d[i][j]) d[i][j] = d[i][w] + d[w][j];
  for (auto& row : d)
    for (int& x : row)
      if (x == inf) x = -1;
  return d;
}

// O(n^2) unit disk graph edge list.
inline std::vector<liardom::Edge> udg_edges(const liardom::PointSet& ps) {
  std::vector<liardom::Edge> edges;
  const auto pts = ps.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].x - pts[j].x;
      const double dy = pts[i].y - pts[j].y;
      if (dx * dx + dy * dy <= 1.0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return edges;
}

// G(n, p) with its own generator so test graphs do not depend on the library RNG.
inline liardom::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<liardom::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return liardom::Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline liardom::PointSet random_points(std::size_t n, double box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, box);
  std::vector<liardom::Point2D> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    pts.push_back({x, y});
  }
  return liardom::PointSet(std::move(pts));
}

}  // namespace oracle
