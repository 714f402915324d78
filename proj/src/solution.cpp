#include "liardom/solution.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liardom {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::ds: return "DS";
    case ProblemKind::kds: return "KDS";
    case ProblemKind::lds: return "LDS";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "DS") return ProblemKind::ds;
  if (upper == "KDS") return ProblemKind::kds;
  if (upper == "LDS") return ProblemKind::lds;
  throw std::invalid_argument("unknown problem kind '" + std::string(text) + "'");
}

Solution make_solution(ProblemKind kind, int k, VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Solution s;
  s.kind = kind;
  s.k = kind == ProblemKind::kds ? k : 1;
  s.vertices = std::move(vertices);
  return s;
}

std::optional<Violation> verify(const Graph& g, const Solution& s) {
  switch (s.kind) {
    case ProblemKind::ds: return check_kds(g, s.vertices, 1);
    case ProblemKind::kds: return check_kds(g, s.vertices, s.k);
    case ProblemKind::lds: return check_lds(g, s.vertices);
  }
  return std::nullopt;
}

}  // namespace liardom
