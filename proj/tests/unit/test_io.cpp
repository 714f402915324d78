#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "liardom/io.hpp"
#include "liardom/kds_ptas.hpp"
#include "support/oracle.hpp"

using namespace liardom;

TEST_CASE("point files round-trip bit-exactly") {
  std::mt19937_64 rng(1);
  const auto ps = oracle::random_points(100, 7.3, rng);
  std::ostringstream out;
  write_points(out, ps);
  std::istringstream in(out.str());
  CHECK(read_points(in) == ps);
  const PointSet awkward({{0.1, -0.0}, {1e-300, 5e300}, {1.0 / 3.0, -2.5}});
  std::ostringstream out2;
  write_points(out2, awkward);
  std::istringstream in2(out2.str());
  const auto back = read_points(in2);
  for (std::size_t i = 0; i < awkward.size(); ++i) {
    CHECK(std::signbit(back[static_cast<Vertex>(i)].y) == std::signbit(awkward[static_cast<Vertex>(i)].y));
  }
  CHECK(back == awkward);
}

TEST_CASE("point file parsing") {
  std::istringstream ok("# header\n0 0\n\n  # indented comment\n1.5 -2\n");
  CHECK(read_points(ok).size() == 2);
  std::istringstream bad("0 0\n1\n");
  CHECK_THROWS_WITH_AS(read_points(bad, "pts"), doctest::Contains("pts:2"), ParseError);
  std::istringstream junk("0 0x\n");
  CHECK_THROWS_AS(read_points(junk), ParseError);
  std::istringstream nan("nan 0\n");
  CHECK_THROWS_AS(read_points(nan), ParseError);
}

TEST_CASE("graph files") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(1 + i, 0.3, rng);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);
  }
  std::istringstream empty("0 0\n");
  CHECK(read_graph(empty).size() == 0);
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_graph(in, "g.txt");
  };
  CHECK_THROWS_WITH_AS(parse("3 2\n0 1\n0 1\n"), doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse("3 1\n1 1\n"), doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("solution files") {
  Solution s = make_solution(ProblemKind::kds, 3, {5, 1, 2});
  s.meta["nodes_explored"] = 17;
  const auto text = solution_to_json(s);
  CHECK(text.find("\"k\": 3") != std::string::npos);
  CHECK(solution_from_json(text) == s);
  const auto lds = make_solution(ProblemKind::lds, 1, {0, 1, 2});
  const auto lds_text = solution_to_json(lds);
  CHECK(lds_text.find("\"k\"") == std::string::npos);
  CHECK(solution_from_json(lds_text) == lds);
  CHECK_THROWS_AS(solution_from_json("{\"kind\": \"LDS\", \"vertices\": [1, 1]}"), ParseError);
  CHECK_THROWS_AS(solution_from_json("{\"kind\": \"LDS\", \"vertices\": [0, 1], \"size\": 3}"), ParseError);
  CHECK_THROWS_AS(solution_from_json("{\"kind\": \"XDS\", \"vertices\": []}"), ParseError);
  CHECK_THROWS_AS(solution_from_json("{\"kind\": \"KDS\", \"vertices\": [0]}"), ParseError);
  CHECK_THROWS_AS(solution_from_json("not json"), ParseError);
  CHECK(solution_from_json("{\"kind\": \"ds\", \"vertices\": [3, 0]}").vertices == VertexSet{0, 3});
}

TEST_CASE("trace files round-trip") {
  const auto r = ptas_kds(path_graph(9), 2, PtasConfig{});
  const auto back = trace_from_json(trace_to_json(r.trace));
  CHECK(back == r.trace);
}

TEST_CASE("label maps") {
  const auto gad = build_kds_index_gadget(BitMatrix::from_string("1"), 1, 1, 1);
  std::ostringstream out;
  write_label_map(out, gad);
  CHECK(out.str() == "v1 0\nw1 1\na1 2\nb 3\n");
}

TEST_CASE("file errors carry the path") {
  CHECK_THROWS_WITH_AS(load_points("/nonexistent/dir/p.txt"), doctest::Contains("/nonexistent/dir/p.txt"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(save_graph("/nonexistent/dir/g.txt", Graph(1)), doctest::Contains("/nonexistent/dir/g.txt"),
                       std::runtime_error);
}
