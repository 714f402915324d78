#include <doctest.h>

#include <algorithm>
#include <set>

#include "liardom/exact.hpp"
#include "liardom/gadgets.hpp"
#include "support/oracle.hpp"

using namespace liardom;

namespace {

std::set<std::pair<std::string, std::string>> labelled_edges(const GadgetGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.graph.edges()) {
    auto a = g.labels[static_cast<std::size_t>(u)].first;
    auto b = g.labels[static_cast<std::size_t>(v)].first;
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("BitMatrix conventions") {
  const auto x = BitMatrix::from_string("0110");
  CHECK(x.side() == 2);
  CHECK(x.at(1, 2));
  CHECK(x.at(2, 1));
  CHECK(!x.at(2, 2));
  CHECK(x.position(1) == std::pair{1, 1});
  CHECK(x.position(2) == std::pair{1, 2});
  CHECK(x.position(3) == std::pair{2, 1});
  CHECK(x.linear(3));
  CHECK(x.to_string() == "0110");
  CHECK(BitMatrix::from_pattern(2, 0b0110).to_string() == "0110");
  CHECK_THROWS_AS(BitMatrix::from_string("011"), std::invalid_argument);
  CHECK_THROWS_AS(BitMatrix::from_string("01a0"), std::invalid_argument);
  CHECK_THROWS_AS(x.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(x.position(5), std::out_of_range);
}

TEST_CASE("LDS index gadget recipe") {
  const auto x = BitMatrix::from_string("1001");
  const auto gad = build_lds_index_gadget(x, 1, 2);
  CHECK(gad.graph.size() == 11);
  CHECK(gad.labels.size() == 11);
  const auto e = labelled_edges(gad);
  CHECK(e.count({"v1", "w1"}));
  CHECK(e.count({"v2", "w2"}));
  CHECK(!e.count({"v1", "w2"}));
  CHECK(!e.count({"a", "v1"}));  // v_I misses a
  CHECK(e.count({"a", "v2"}));
  CHECK(!e.count({"a", "w2"}));  // w_J misses a
  CHECK(e.count({"a", "w1"}));
  CHECK(e.count({"a", "b"}));
  for (const char* hub : {"u", "y"}) {
    for (const char* t : {"v1", "v2", "w1", "w2", "a", "b"}) {
      std::string h = hub, s = t;
      CHECK(e.count(std::minmax(h, s)));
    }
  }
  CHECK(gad.graph.degree(gad.vertex("u'")) == 1);
  CHECK(gad.graph.degree(gad.vertex("y'")) == 1);
  CHECK(gad.graph.degree(gad.vertex("z")) == 2);
  CHECK(e.size() == 2 + 2 + 1 + 4 + 12);
  CHECK_THROWS_AS(build_lds_index_gadget(x, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(gad.vertex("q"), std::out_of_range);
}

TEST_CASE("LDS gadget optima on r = 2") {
  CHECK(exact_min_lds(build_lds_index_gadget(BitMatrix::from_string("1000"), 1, 1).graph).optimum == 6);
  CHECK(exact_min_lds(build_lds_index_gadget(BitMatrix::from_string("0111"), 1, 1).graph).optimum == 7);
}

TEST_CASE("LDS gadget forced vertices") {
  // Every minimum solution holds u, u', y, y'. When x[I][J] = 1 it also holds
  // a or b; when x[I][J] = 0 only some minimum solution does, since e.g.
  // {v1, v2, u, y, u', y', z} can be optimal there.
  int without_ab = 0;
  for (std::uint64_t pattern = 0; pattern < 16; ++pattern) {
    const auto x = BitMatrix::from_pattern(2, pattern);
    for (int i = 1; i <= 4; ++i) {
      const auto [row, col] = x.position(i);
      const auto gad = build_lds_index_gadget(x, row, col);
      const auto a = oracle::adjacency(gad.graph);
      const int best = *oracle::min_lds(gad.graph);
      oracle::Mask forced = 0;
      for (const char* role : {"u", "u'", "y", "y'"}) forced |= oracle::Mask{1} << gad.vertex(role);
      const oracle::Mask ab = (oracle::Mask{1} << gad.vertex("a")) | (oracle::Mask{1} << gad.vertex("b"));
      bool some_with_ab = false;
      for (oracle::Mask m = 0; m < (oracle::Mask{1} << a.n); ++m) {
        if (std::popcount(m) != best || !oracle::is_lds(a, m)) continue;
        CHECK((m & forced) == forced);
        if (x.at(row, col)) CHECK((m & ab) != 0);
        some_with_ab = some_with_ab || (m & ab) != 0;
        without_ab += (m & ab) == 0;
      }
      CHECK(some_with_ab);
    }
  }
  MESSAGE("minimum solutions avoiding both a and b (all with x[I][J] = 0): " << without_ab);
}

TEST_CASE("k-DS index gadget recipe") {
  const auto x = BitMatrix::from_string("1111");
  const auto gad = build_kds_index_gadget(x, 2, 1, 3);
  CHECK(gad.graph.size() == 8);
  const auto e = labelled_edges(gad);
  for (const char* a : {"a1", "a2", "a3"}) CHECK(e.count({a, "b"}));
  CHECK(e.count({"a1", "v2"}));
  CHECK(e.count({"a2", "v2"}));
  CHECK(!e.count({"a3", "v2"}));  // v_I misses a_k
  CHECK(!e.count({"a3", "w1"}));  // w_J misses a_k
  CHECK(e.count({"a3", "w2"}));
  CHECK(e.count({"a3", "v1"}));
  CHECK(!e.count({"a1", "a2"}));
  CHECK(e.size() == 4 + 3 + 3 * 4 - 2);
  const auto clique = labelled_edges(build_kds_index_gadget(x, 2, 1, 3, true));
  CHECK(clique.count({"a1", "a2"}));
  CHECK(clique.size() == e.size() + 3);
  CHECK_THROWS_AS(build_kds_index_gadget(x, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("k-DS gadget: b forces k vertices of A and b") {
  for (int k : {1, 2, 3}) {
    const auto gad = build_kds_index_gadget(BitMatrix::from_string("1010"), 1, 1, k);
    const auto a = oracle::adjacency(gad.graph);
    const int best = *oracle::min_kds(gad.graph, k);
    CHECK(exact_min_kds(gad.graph, k).optimum == best);
    oracle::Mask ab = oracle::Mask{1} << gad.vertex("b");
    for (int i = 1; i <= k; ++i) ab |= oracle::Mask{1} << gad.vertex("a" + std::to_string(i));
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << a.n); ++m) {
      if (oracle::is_kds(a, m, k)) CHECK(std::popcount(m & ab) >= k);
    }
  }
}

TEST_CASE("W[2] reduction structure") {
  const auto gad = build_w2_bipartite_reduction(complete_graph(3));
  CHECK(gad.graph.size() == 14);
  const auto colours = two_coloring(gad.graph);
  REQUIRE(colours.size() == 14);
  for (const auto& [role, v] : gad.labels) {
    const bool part_one = role.rfind("u1:", 0) == 0 || role == "z1" || role == "z2" || role == "s_z'1" ||
                          role == "s_z'2";
    CHECK((colours[static_cast<std::size_t>(v)] == colours[0]) == part_one);
  }
  const auto e = labelled_edges(gad);
  CHECK(e.count({"u1:0", "u2:1"}));
  CHECK(e.count({"u1:1", "u2:0"}));
  CHECK(e.count({"u1:0", "u2:0"}));
  CHECK(e.count({"u1:2", "z'1"}));
  CHECK(e.count({"u2:2", "z2"}));
  CHECK(e.count({"z'1", "z1"}));
  CHECK(e.count({"s_z1", "z1"}));
  CHECK(e.count({"s_z'2", "z'2"}));
  CHECK(gad.graph.degree(gad.vertex("s_z1")) == 1);
  CHECK(e.size() == 6 + 3 + 12 + 2 + 4);
}

TEST_CASE("W[2] images agree with subset enumeration") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : connected_labelled_graphs(n)) {
      const auto image = build_w2_bipartite_reduction(g).graph;
      CHECK(exact_min_lds(image).optimum == oracle::min_lds(image));
    }
  }
  const auto p4 = build_w2_bipartite_reduction(path_graph(4)).graph;
  CHECK(exact_min_lds(p4).optimum == 10);
}

TEST_CASE("connected labelled graph counts") {
  // OEIS A001187: 1, 1, 4, 38, 728.
  CHECK(connected_labelled_graphs(1).size() == 1);
  CHECK(connected_labelled_graphs(2).size() == 1);
  CHECK(connected_labelled_graphs(3).size() == 4);
  CHECK(connected_labelled_graphs(4).size() == 38);
  CHECK(connected_labelled_graphs(5).size() == 728);
}

TEST_CASE("claim reports") {
  ClaimParams p;
  const auto lds = verify_reduction_claims(GadgetKind::lds_index, p);
  CHECK(lds.checks.size() == 64);
  CHECK(lds.all_passed());
  p.a_clique = true;
  p.k = 3;
  CHECK(verify_reduction_claims(GadgetKind::kds_index, p).all_passed());
  CHECK(parse_gadget_kind("w2") == GadgetKind::w2);
  CHECK_THROWS_AS(parse_gadget_kind("w3"), std::invalid_argument);
}

TEST_CASE("golden edge lists are stable") {
  const auto a = build_lds_index_gadget(BitMatrix::from_string("0110"), 2, 2);
  const auto b = build_lds_index_gadget(BitMatrix::from_string("0110"), 2, 2);
  CHECK(a.graph == b.graph);
  CHECK(a.labels == b.labels);
  CHECK(a.graph.edges() == std::vector<Edge>{{0, 3}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {1, 6}, {1, 7},
                                               {2, 4}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 5}, {4, 6},
                                               {4, 7}, {5, 6}, {5, 7}, {6, 8}, {6, 10}, {7, 9},
                                               {7, 10}});
}
