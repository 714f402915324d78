#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "liardom/domination.hpp"
#include "liardom/graph.hpp"

namespace liardom {

enum class ProblemKind { ds, kds, lds };

const char* to_string(ProblemKind kind);
/// Accepts "DS", "KDS", "LDS" (case-insensitive). Throws std::invalid_argument.
ProblemKind parse_problem_kind(std::string_view text);

/// A vertex subset answering one domination question, plus solver counters.
struct Solution {
  ProblemKind kind = ProblemKind::ds;
  int k = 1;  // meaningful for KDS only; DS is stored as k = 1
  VertexSet vertices;
  std::map<std::string, std::int64_t> meta;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Builds a solution, sorting and de-duplicating `vertices`.
Solution make_solution(ProblemKind kind, int k, VertexSet vertices);

/// Runs the checker matching `s.kind` against `g`.
std::optional<Violation> verify(const Graph& g, const Solution& s);

}  // namespace liardom
