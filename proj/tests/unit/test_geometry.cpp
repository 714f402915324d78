#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "liardom/geometry.hpp"
#include "support/oracle.hpp"

using namespace liardom;

TEST_CASE("build_udg on small configurations") {
  CHECK(build_udg(PointSet({{0, 0}, {2, 0}})).edge_count() == 0);
  // Distance exactly 1: closed disks make this an edge.
  CHECK(build_udg(PointSet({{0, 0}, {1, 0}})).edges() == std::vector<Edge>{{0, 1}});
  CHECK(build_udg(PointSet({{0, 0}, {0.5, 0}, {1.2, 0}})).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  // Duplicated points are adjacent.
  CHECK(build_udg(PointSet({{3, 3}, {3, 3}})).edge_count() == 1);
}

TEST_CASE("PointSet rejects non-finite coordinates") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(PointSet({{0, 0}, {nan, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{inf, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{0, 0}}).at(1), std::out_of_range);
}

TEST_CASE("coverage examples") {
  const PointSet ps({{0, 0}, {0.4, 0}, {0.9, 0}});
  CHECK(coverage(ps, 0, CoverageRadius::half).members == VertexSet{0, 1});
  CHECK(coverage(ps, 0, CoverageRadius::three_halves).members == VertexSet{0, 1, 2});
  CHECK(coverage(ps, 2, CoverageRadius::half).members == VertexSet{1, 2});
  CHECK_THROWS_AS(coverage(ps, 3, CoverageRadius::one), std::out_of_range);
  // Boundary points at exactly 1/2 and 3/2 are members.
  const PointSet edge({{0, 0}, {0.5, 0}, {0, 1.5}});
  CHECK(coverage(edge, 0, CoverageRadius::half).members == VertexSet{0, 1});
  CHECK(coverage(edge, 0, CoverageRadius::three_halves).members == VertexSet{0, 1, 2});
}

TEST_CASE("sort_by_x tie-breaking") {
  CHECK(sort_by_x(PointSet({{1, 0}, {0, 0}})) == std::vector<Vertex>{1, 0});
  CHECK(sort_by_x(PointSet({{0, 1}, {0, 0}})) == std::vector<Vertex>{1, 0});
  CHECK(sort_by_x(PointSet({{0, 0}})) == std::vector<Vertex>{0});
  CHECK(sort_by_x(PointSet({{2, 2}, {2, 2}, {1, 5}})) == std::vector<Vertex>{2, 0, 1});
  CHECK(sort_by_x(PointSet{}).empty());
}

TEST_CASE("unit disk graph matches pairwise recomputation") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 50;
    const double box = 0.5 + static_cast<double>(trial % 7);
    const auto ps = oracle::random_points(n, box, rng);
    const auto g = build_udg(ps);
    REQUIRE(g.edges() == oracle::udg_edges(ps));
    for (Vertex p = 0; p < static_cast<Vertex>(n); ++p) {
      const auto half = coverage(ps, p, CoverageRadius::half).members;
      const auto one = coverage(ps, p, CoverageRadius::one).members;
      const auto outer = coverage(ps, p, CoverageRadius::three_halves).members;
      CHECK(std::includes(one.begin(), one.end(), half.begin(), half.end()));
      CHECK(std::includes(outer.begin(), outer.end(), one.begin(), one.end()));
      VertexSet closed{p};
      for (Vertex q : g.neighbors(p)) closed.push_back(q);
      std::sort(closed.begin(), closed.end());
      CHECK(one == closed);
    }
  }
}
