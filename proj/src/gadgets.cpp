#include "liardom/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace liardom {

BitMatrix::BitMatrix(int side) : side_(side) {
  if (side < 1) throw std::invalid_argument("matrix side must be >= 1");
  bits_.assign(static_cast<std::size_t>(side) * static_cast<std::size_t>(side), 0);
}

BitMatrix BitMatrix::from_string(std::string_view bits) {
  std::string digits;
  for (char c : bits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
    digits.push_back(c);
  }
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(digits.size()))));
  if (side < 1 || static_cast<std::size_t>(side) * static_cast<std::size_t>(side) != digits.size()) {
    throw std::invalid_argument("bit string length " + std::to_string(digits.size()) +
                                " is not a positive perfect square");
  }
  BitMatrix m(side);
  for (std::size_t i = 0; i < digits.size(); ++i) m.bits_[i] = digits[i] == '1';
  return m;
}

BitMatrix BitMatrix::from_pattern(int side, std::uint64_t pattern) {
  BitMatrix m(side);
  if (m.entries() > 64) throw std::invalid_argument("pattern holds at most 64 entries");
  for (int i = 0; i < m.entries(); ++i) m.bits_[static_cast<std::size_t>(i)] = (pattern >> i) & 1U;
  return m;
}

std::size_t BitMatrix::offset(int row, int col) const {
  if (row < 1 || row > side_ || col < 1 || col > side_) {
    throw std::out_of_range("matrix position (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside 1.." + std::to_string(side_));
  }
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(side_) +
         static_cast<std::size_t>(col - 1);
}

bool BitMatrix::at(int row, int col) const { return bits_[offset(row, col)] != 0; }
void BitMatrix::set(int row, int col, bool value) { bits_[offset(row, col)] = value; }

std::pair<int, int> BitMatrix::position(int index) const {
  if (index < 1 || index > entries()) throw std::out_of_range("linear index out of range");
  return {(index - 1) / side_ + 1, (index - 1) % side_ + 1};
}

bool BitMatrix::linear(int index) const {
  auto [row, col] = position(index);
  return at(row, col);
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (char b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Vertex GadgetGraph::vertex(std::string_view role) const {
  for (const auto& [name, v] : labels) {
    if (name == role) return v;
  }
  throw std::out_of_range("gadget has no vertex labelled '" + std::string(role) + "'");
}

namespace {

class GadgetBuilder {
 public:
  Vertex add(std::string role) {
    const auto v = static_cast<Vertex>(labels_.size());
    labels_.emplace_back(std::move(role), v);
    return v;
  }
  void connect(Vertex u, Vertex v) { edges_.emplace_back(std::min(u, v), std::max(u, v)); }
  GadgetGraph finish() {
    return GadgetGraph{Graph::from_edges(labels_.size(), edges_), std::move(labels_)};
  }

 private:
  std::vector<std::pair<std::string, Vertex>> labels_;
  std::vector<Edge> edges_;
};

struct Sides {
  std::vector<Vertex> v, w;
};

Sides add_bipartite_sides(GadgetBuilder& b, const BitMatrix& x) {
  Sides s;
  const int r = x.side();
  for (int i = 1; i <= r; ++i) s.v.push_back(b.add("v" + std::to_string(i)));
  for (int j = 1; j <= r; ++j) s.w.push_back(b.add("w" + std::to_string(j)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      if (x.at(i, j)) b.connect(s.v[static_cast<std::size_t>(i - 1)], s.w[static_cast<std::size_t>(j - 1)]);
    }
  }
  return s;
}

void check_position(const BitMatrix& x, int row, int col) {
  (void)x.at(row, col);  // throws when out of range
}

}  // namespace

GadgetGraph build_lds_index_gadget(const BitMatrix& x, int row, int col) {
  check_position(x, row, col);
  GadgetBuilder b;
  const auto sides = add_bipartite_sides(b, x);
  const Vertex a = b.add("a");
  const Vertex bb = b.add("b");
  const Vertex u = b.add("u");
  const Vertex y = b.add("y");
  const Vertex u2 = b.add("u'");
  const Vertex y2 = b.add("y'");
  const Vertex z = b.add("z");

  b.connect(a, bb);
  for (int i = 1; i <= x.side(); ++i) {
    if (i != row) b.connect(sides.v[static_cast<std::size_t>(i - 1)], a);
    if (i != col) b.connect(sides.w[static_cast<std::size_t>(i - 1)], a);
  }
  b.connect(u, u2);
  b.connect(y, y2);
  b.connect(u, z);
  b.connect(y, z);
  std::vector<Vertex> hub_side = sides.v;
  hub_side.insert(hub_side.end(), sides.w.begin(), sides.w.end());
  hub_side.push_back(a);
  hub_side.push_back(bb);
  for (Vertex t : hub_side) {
    b.connect(t, u);
    b.connect(t, y);
  }
  return b.finish();
}

GadgetGraph build_kds_index_gadget(const BitMatrix& x, int row, int col, int k,
                                   bool a_clique) {
  check_position(x, row, col);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  GadgetBuilder b;
  const auto sides = add_bipartite_sides(b, x);
  std::vector<Vertex> a;
  for (int i = 1; i <= k; ++i) a.push_back(b.add("a" + std::to_string(i)));
  const Vertex bb = b.add("b");

  for (Vertex ai : a) b.connect(ai, bb);
  if (a_clique) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) b.connect(a[i], a[j]);
  }
  auto attach = [&](Vertex t, bool special) {
    // The two index vertices miss a_k.
    for (int i = 0; i < k; ++i) {
      if (special && i == k - 1) continue;
      b.connect(t, a[static_cast<std::size_t>(i)]);
    }
  };
  for (int i = 1; i <= x.side(); ++i) {
    attach(sides.v[static_cast<std::size_t>(i - 1)], i == row);
    attach(sides.w[static_cast<std::size_t>(i - 1)], i == col);
  }
  return b.finish();
}

GadgetGraph build_w2_bipartite_reduction(const Graph& g) {
  const auto n = g.size();
  GadgetBuilder b;
  std::vector<Vertex> one, two;
  for (std::size_t u = 0; u < n; ++u) one.push_back(b.add("u1:" + std::to_string(u)));
  const Vertex z1 = b.add("z1");
  const Vertex z2 = b.add("z2");
  const Vertex s_zp1 = b.add("s_z'1");
  const Vertex s_zp2 = b.add("s_z'2");
  for (std::size_t u = 0; u < n; ++u) two.push_back(b.add("u2:" + std::to_string(u)));
  const Vertex zp1 = b.add("z'1");
  const Vertex zp2 = b.add("z'2");
  const Vertex s_z1 = b.add("s_z1");
  const Vertex s_z2 = b.add("s_z2");

  for (auto [u, v] : g.edges()) {
    b.connect(one[static_cast<std::size_t>(u)], two[static_cast<std::size_t>(v)]);
    b.connect(one[static_cast<std::size_t>(v)], two[static_cast<std::size_t>(u)]);
  }
  for (std::size_t u = 0; u < n; ++u) {
    b.connect(one[u], two[u]);
    b.connect(one[u], zp1);
    b.connect(one[u], zp2);
    b.connect(two[u], z1);
    b.connect(two[u], z2);
  }
  b.connect(z1, zp1);
  b.connect(z2, zp2);
  b.connect(z1, s_z1);
  b.connect(z2, s_z2);
  b.connect(zp1, s_zp1);
  b.connect(zp2, s_zp2);
  return b.finish();
}

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::lds_index: return "lds-index";
    case GadgetKind::kds_index: return "kds-index";
    case GadgetKind::w2: return "w2";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view text) {
  if (text == "lds-index") return GadgetKind::lds_index;
  if (text == "kds-index") return GadgetKind::kds_index;
  if (text == "w2") return GadgetKind::w2;
  throw std::invalid_argument("unknown gadget kind '" + std::string(text) + "'");
}

std::size_t ClaimReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; }));
}

std::vector<Graph> connected_labelled_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("order must be in 1..8");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if ((mask >> e) & 1U) edges.push_back(slots[e]);
    }
    auto g = Graph::from_edges(static_cast<std::size_t>(n), edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::string describe_edges(const Graph& g) {
  std::string out = "n=" + std::to_string(g.size()) + " E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

ClaimReport verify_reduction_claims(GadgetKind kind, const ClaimParams& params,
                                    const ExactOptions& oracle) {
  ClaimReport report;
  report.kind = kind;
  if (kind == GadgetKind::w2) {
    for (int order = 1; order <= params.max_order; ++order) {
      for (const auto& g : connected_labelled_graphs(order)) {
        const int gamma = exact_min_ds(g, oracle).optimum.value();
        const auto image = build_w2_bipartite_reduction(g);
        const auto lds = exact_min_lds(image.graph, oracle);
        ClaimCheck c;
        c.instance = describe_edges(g) + " gamma=" + std::to_string(gamma);
        c.expected = gamma + 8;
        c.observed = lds.optimum.value_or(-1);
        c.pass = c.observed == c.expected;
        report.checks.push_back(std::move(c));
      }
    }
    return report;
  }

  const int r = params.side;
  const int entries = r * r;
  if (entries > 16) throw std::invalid_argument("exhaustive sweep limited to r <= 4");
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << entries); ++pattern) {
    const auto x = BitMatrix::from_pattern(r, pattern);
    for (int index = 1; index <= entries; ++index) {
      const auto [row, col] = x.position(index);
      const bool bit = x.at(row, col);
      ClaimCheck c;
      c.instance = "x=" + x.to_string() + " I=" + std::to_string(row) + " J=" + std::to_string(col);
      if (kind == GadgetKind::lds_index) {
        c.expected = bit ? 6 : 7;
        c.observed = exact_min_lds(build_lds_index_gadget(x, row, col).graph, oracle).optimum.value_or(-1);
      } else {
        c.expected = bit ? params.k + 1 : params.k + 2;
        c.instance += " k=" + std::to_string(params.k) + (params.a_clique ? " clique" : "");
        c.observed = exact_min_kds(build_kds_index_gadget(x, row, col, params.k, params.a_clique).graph, params.k, oracle)
                         .optimum.value_or(-1);
      }
      c.pass = c.observed == c.expected;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace liardom
