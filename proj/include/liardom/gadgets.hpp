#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liardom/exact.hpp"
#include "liardom/graph.hpp"

namespace liardom {

/// r x r 0/1 matrix. Entries are addressed 1-based as (I, J); the linear
/// index i in [1, r^2] maps row-major to I = (i-1)/r + 1, J = (i-1)%r + 1.
class BitMatrix {
 public:
  explicit BitMatrix(int side);

  /// Row-major '0'/'1' string of length r^2 (r inferred). Whitespace ignored.
  static BitMatrix from_string(std::string_view bits);
  /// Bit b of `pattern` (LSB first) becomes linear entry b + 1.
  static BitMatrix from_pattern(int side, std::uint64_t pattern);

  int side() const { return side_; }
  int entries() const { return side_ * side_; }
  bool at(int row, int col) const;
  void set(int row, int col, bool value);
  bool linear(int index) const;
  std::pair<int, int> position(int index) const;
  std::string to_string() const;

 private:
  std::size_t offset(int row, int col) const;

  int side_;
  std::vector<char> bits_;
};

/// A reduction output together with the role of each vertex.
struct GadgetGraph {
  Graph graph;
  std::vector<std::pair<std::string, Vertex>> labels;  // in vertex order

  /// Throws std::out_of_range for an unknown role.
  Vertex vertex(std::string_view role) const;
};

/// Liar's-domination index gadget on 2r + 7 vertices:
/// v1..vr, w1..wr, a, b, u, y, u', y', z (in that vertex order).
GadgetGraph build_lds_index_gadget(const BitMatrix& x, int row, int col);

/// k-tuple-domination index gadget on 2r + k + 1 vertices:
/// v1..vr, w1..wr, a1..ak, b. With `a_clique` the a_i are also joined
/// pairwise; this variant is off by default and exists for analysis only.
GadgetGraph build_kds_index_gadget(const BitMatrix& x, int row, int col, int k,
                                   bool a_clique = false);

/// Bipartite image of g for the parameterised reduction from dominating set.
/// Part one: u1 copies, z1, z2, s_z'1, s_z'2; part two: u2 copies, z'1, z'2,
/// s_z1, s_z2. 2n + 8 vertices.
GadgetGraph build_w2_bipartite_reduction(const Graph& g);

enum class GadgetKind { lds_index, kds_index, w2 };

const char* to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(std::string_view text);

struct ClaimCheck {
  std::string instance;
  int expected = 0;
  int observed = 0;
  bool pass = false;
};

struct ClaimReport {
  GadgetKind kind = GadgetKind::lds_index;
  std::vector<ClaimCheck> checks;

  std::size_t passed() const;
  bool all_passed() const { return passed() == checks.size(); }
};

struct ClaimParams {
  int side = 2;      // index gadgets: matrix side r
  int k = 2;         // k-DS gadget
  int max_order = 5; // W[2]: largest source graph order
  bool a_clique = false;
};

/// Exhaustive oracle sweeps:
///  - lds_index: every r x r matrix and position; optimum 6 iff x[I][J] = 1,
///    else 7.
///  - kds_index: same sweep; optimum k+1 iff x[I][J] = 1, else k+2.
///  - w2: every connected labelled graph on 1..max_order vertices;
///    min LDS(G') = gamma(G) + 8.
ClaimReport verify_reduction_claims(GadgetKind kind, const ClaimParams& params,
                                    const ExactOptions& oracle = {});

/// Every connected labelled graph on exactly n vertices, in edge-mask order.
std::vector<Graph> connected_labelled_graphs(int n);

}  // namespace liardom
