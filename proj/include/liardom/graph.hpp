#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace liardom {

using Vertex = int;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists.
///
/// Vertices are 0..size()-1. Adjacency is symmetric, contains no self-loops,
/// and every neighbor list is sorted ascending without duplicates. Instances
/// are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on self-loops, duplicate edges (in either
  /// orientation) and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < size(); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices` (sorted, duplicate-free). Local vertex i
  /// corresponds to vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Hop distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Two-colouring with colour[v] in {0, 1}, or empty when g has an odd cycle.
std::vector<int> two_coloring(const Graph& g);

// Small named families used throughout tests and generators.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace liardom
