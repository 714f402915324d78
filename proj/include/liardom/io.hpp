#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "liardom/gadgets.hpp"
#include "liardom/geometry.hpp"
#include "liardom/graph.hpp"
#include "liardom/kds_ptas.hpp"
#include "liardom/lds_approx.hpp"
#include "liardom/solution.hpp"

namespace liardom {

/// Malformed input. The message carries the source name and line when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point files: one "x y" per line, '#' starts a comment line, blank lines
// skipped. Values are written in shortest round-trip form.
void write_points(std::ostream& out, const PointSet& ps);
PointSet read_points(std::istream& in, const std::string& source = "<points>");

// Graph files: "n m", then m lines "u v" with u < v.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in, const std::string& source = "<graph>");

// Solution files: JSON object {kind, k (KDS only), vertices, size, meta}.
std::string solution_to_json(const Solution& s);
Solution solution_from_json(const std::string& text, const std::string& source = "<solution>");

/// "role index" per vertex, in vertex order.
void write_label_map(std::ostream& out, const GadgetGraph& gadget);

std::string stats_to_json(const ApproxStats& stats);
std::string iteration_log_to_json(std::span<const IterationRecord> log);
std::string trace_to_json(const ExpansionTrace& trace);
ExpansionTrace trace_from_json(const std::string& text, const std::string& source = "<trace>");

// File wrappers; failures name the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
PointSet load_points(const std::filesystem::path& path);
void save_points(const std::filesystem::path& path, const PointSet& ps);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
Solution load_solution(const std::filesystem::path& path);
void save_solution(const std::filesystem::path& path, const Solution& s);

}  // namespace liardom
