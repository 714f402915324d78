#include "liardom/domination.hpp"

#include <algorithm>
#include <vector>

namespace liardom {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::underdominated: return "UNDERDOMINATED";
    case ViolationKind::pair: return "PAIR";
    case ViolationKind::infeasible_vertex: return "INFEASIBLE_VERTEX";
    case ViolationKind::infeasible_pair: return "INFEASIBLE_PAIR";
  }
  return "UNKNOWN";
}

std::string Violation::describe() const {
  std::string out = to_string(kind);
  out += "(" + std::to_string(u);
  if (v >= 0) out += "," + std::to_string(v);
  out += "): observed " + std::to_string(observed) + ", required " + std::to_string(required);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  VertexSet out(nb.begin(), nb.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.size(), 0);
  for (Vertex v : set) {
    if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

// |N[v] ∩ set| for every v.
std::vector<int> closed_counts(const Graph& g, const std::vector<char>& in) {
  std::vector<int> count(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    int c = in[v];
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) c += in[static_cast<std::size_t>(w)];
    count[v] = c;
  }
  return count;
}

// Shared core of check_lds / lds_feasible. Pairs at hop distance > 2 have
// disjoint closed neighbourhoods, so once condition (i) holds their union
// already carries >= 4 chosen vertices; only pairs inside N^2[u] are scanned.
std::optional<Violation> liar_check(const Graph& g, const std::vector<char>& in,
                                    ViolationKind vertex_kind, ViolationKind pair_kind) {
  const auto n = g.size();
  const auto count = closed_counts(g, in);
  for (std::size_t v = 0; v < n; ++v) {
    if (count[v] < 2) return Violation{vertex_kind, static_cast<Vertex>(v), -1, count[v], 2};
  }

  std::vector<int> mark(n, -1);     // mark[w] == u  <=>  w ∈ N[u]
  std::vector<int> seen(n, -1);     // seen[w] == u  <=>  w collected into ball
  VertexSet ball;
  for (std::size_t us = 0; us < n; ++us) {
    const auto u = static_cast<Vertex>(us);
    mark[us] = u;
    for (Vertex w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = u;

    ball.clear();
    auto collect = [&](Vertex w) {
      if (w > u && seen[static_cast<std::size_t>(w)] != u) {
        seen[static_cast<std::size_t>(w)] = u;
        ball.push_back(w);
      }
    };
    for (Vertex w : g.neighbors(u)) {
      collect(w);
      for (Vertex x : g.neighbors(w)) collect(x);
    }
    std::sort(ball.begin(), ball.end());

    for (Vertex v : ball) {
      const auto vs = static_cast<std::size_t>(v);
      int common = (mark[vs] == u && in[vs]) ? 1 : 0;
      for (Vertex w : g.neighbors(v)) {
        const auto ws = static_cast<std::size_t>(w);
        if (mark[ws] == u && in[ws]) ++common;
      }
      const int united = count[us] + count[vs] - common;
      if (united < 3) return Violation{pair_kind, u, v, united, 3};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_kds(const Graph& g, std::span<const Vertex> d, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto count = closed_counts(g, membership(g, d));
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (count[v] < k) return Violation{ViolationKind::underdominated, static_cast<Vertex>(v), -1, count[v], k};
  }
  return std::nullopt;
}

std::optional<Violation> check_lds(const Graph& g, std::span<const Vertex> l) {
  return liar_check(g, membership(g, l), ViolationKind::underdominated, ViolationKind::pair);
}

std::optional<Violation> lds_feasible(const Graph& g) {
  return liar_check(g, std::vector<char>(g.size(), 1), ViolationKind::infeasible_vertex,
                    ViolationKind::infeasible_pair);
}

std::optional<Violation> kds_feasible(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (std::size_t v = 0; v < g.size(); ++v) {
    const int size = static_cast<int>(g.degree(static_cast<Vertex>(v))) + 1;
    if (size < k) return Violation{ViolationKind::infeasible_vertex, static_cast<Vertex>(v), -1, size, k};
  }
  return std::nullopt;
}

}  // namespace liardom
