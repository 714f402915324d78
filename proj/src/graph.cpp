#include "liardom/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace liardom {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v)) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                  std::to_string(*dup) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!contains(vertices[i])) throw std::out_of_range("induced: vertex out of range");
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[static_cast<std::size_t>(vertices[i])]) {
      int j = local[static_cast<std::size_t>(w)];
      if (j >= 0) sub.adjacency_[i].push_back(j);
    }
    std::sort(sub.adjacency_[i].begin(), sub.adjacency_[i].end());
    sub.edge_count_ += sub.adjacency_[i].size();
  }
  sub.edge_count_ /= 2;
  return sub;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Vertex> queue{source};
  dist.at(static_cast<std::size_t>(source)) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> two_coloring(const Graph& g) {
  std::vector<int> colour(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(u)]) {
          return {};
        }
      }
    }
  }
  return colour;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace liardom
