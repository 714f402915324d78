#include "liardom/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liardom/report.hpp"

namespace liardom {

using nlohmann::json;

namespace {

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

template <typename T>
bool parse_number(const std::string& text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

void write_points(std::ostream& out, const PointSet& ps) {
  for (const auto& p : ps.points()) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

PointSet read_points(std::istream& in, const std::string& source) {
  std::vector<Point2D> pts;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (skippable(line)) continue;
    const auto t = tokens(line);
    Point2D p;
    if (t.size() != 2 || !parse_number(t[0], p.x) || !parse_number(t[1], p.y)) {
      throw ParseError(where(source, lineno) + "expected two numbers, got '" + line + "'");
    }
    pts.push_back(p);
  }
  try {
    return PointSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!skippable(line)) return true;
    }
    return false;
  };
  if (!next()) throw ParseError(source + ": missing 'n m' header");
  auto head = tokens(line);
  std::size_t n = 0, m = 0;
  if (head.size() != 2 || !parse_number(head[0], n) || !parse_number(head[1], m)) {
    throw ParseError(where(source, lineno) + "expected 'n m' header, got '" + line + "'");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next()) throw ParseError(source + ": expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto t = tokens(line);
    Vertex u = 0, v = 0;
    if (t.size() != 2 || !parse_number(t[0], u) || !parse_number(t[1], v)) {
      throw ParseError(where(source, lineno) + "expected 'u v', got '" + line + "'");
    }
    if (u == v) throw ParseError(where(source, lineno) + "self-loop at " + std::to_string(u));
    if (u > v) throw ParseError(where(source, lineno) + "edge endpoints must satisfy u < v");
    if (u < 0 || static_cast<std::size_t>(v) >= n) {
      throw ParseError(where(source, lineno) + "endpoint out of range 0.." + std::to_string(n) + "-1");
    }
    if (!seen.insert({u, v}).second) {
      throw ParseError(where(source, lineno) + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
  }
  if (next()) throw ParseError(where(source, lineno) + "unexpected content after " + std::to_string(m) + " edges");
  return Graph::from_edges(n, edges);
}

std::string solution_to_json(const Solution& s) {
  json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == ProblemKind::kds) j["k"] = s.k;
  j["vertices"] = s.vertices;
  j["size"] = s.size();
  j["meta"] = s.meta;
  return j.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text, const std::string& source) {
  try {
    const auto j = json::parse(text);
    const auto kind = parse_problem_kind(j.at("kind").get<std::string>());
    const int k = kind == ProblemKind::kds ? j.at("k").get<int>() : 1;
    auto vertices = j.at("vertices").get<VertexSet>();
    if (std::any_of(vertices.begin(), vertices.end(), [](Vertex v) { return v < 0; })) {
      throw ParseError(source + ": negative vertex index");
    }
    Solution s = make_solution(kind, k, vertices);
    if (s.size() != vertices.size()) throw ParseError(source + ": repeated vertex in 'vertices'");
    if (j.contains("size") && j.at("size").get<std::size_t>() != s.size()) {
      throw ParseError(source + ": 'size' does not match the vertex list");
    }
    if (j.contains("meta")) s.meta = j.at("meta").get<std::map<std::string, std::int64_t>>();
    return s;
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

void write_label_map(std::ostream& out, const GadgetGraph& gadget) {
  for (const auto& [role, v] : gadget.labels) out << role << ' ' << v << '\n';
}

std::string stats_to_json(const ApproxStats& st) {
  json j = {{"iterations", st.iterations},
            {"max_added_per_iteration", st.max_added_per_iteration},
            {"repair_added", st.repair_added},
            {"case1_entries", st.case1_entries},
            {"case2_entries", st.case2_entries},
            {"select_shortfall", st.select_shortfall}};
  return j.dump(2) + "\n";
}

std::string iteration_log_to_json(std::span<const IterationRecord> log) {
  json arr = json::array();
  for (const auto& rec : log) {
    arr.push_back({{"p_left", rec.p_left},
                   {"added", rec.added},
                   {"t", rec.t},
                   {"annulus_phase", rec.annulus_phase},
                   {"select_phase", rec.select_phase},
                   {"shortfall", rec.shortfall}});
  }
  return arr.dump(2) + "\n";
}

std::string trace_to_json(const ExpansionTrace& trace) {
  json records = json::array();
  for (const auto& rec : trace.records) {
    json growth = json::array();
    for (const auto& step : rec.growth) {
      growth.push_back({{"radius", step.radius},
                        {"local_optimum", step.local_optimum ? json(*step.local_optimum) : json(nullptr)}});
    }
    records.push_back({{"seed", rec.seed},
                       {"r_hat", rec.r_hat},
                       {"inner_set", rec.inner_set},
                       {"outer_set", rec.outer_set},
                       {"local_solution", rec.local_solution},
                       {"borrowed", rec.borrowed},
                       {"growth", growth}});
  }
  json j = {{"k", trace.k}, {"epsilon", trace.epsilon}, {"records", records}};
  return j.dump(2) + "\n";
}

ExpansionTrace trace_from_json(const std::string& text, const std::string& source) {
  try {
    const auto j = json::parse(text);
    ExpansionTrace trace;
    trace.k = j.at("k").get<int>();
    trace.epsilon = j.at("epsilon").get<double>();
    for (const auto& r : j.at("records")) {
      ExpansionRecord rec;
      rec.seed = r.at("seed").get<Vertex>();
      rec.r_hat = r.at("r_hat").get<int>();
      rec.inner_set = r.at("inner_set").get<VertexSet>();
      rec.outer_set = r.at("outer_set").get<VertexSet>();
      rec.local_solution = r.at("local_solution").get<VertexSet>();
      rec.borrowed = r.at("borrowed").get<bool>();
      for (const auto& step : r.at("growth")) {
        GrowthStep g;
        g.radius = step.at("radius").get<int>();
        if (!step.at("local_optimum").is_null()) g.local_optimum = step.at("local_optimum").get<int>();
        rec.growth.push_back(g);
      }
      trace.records.push_back(std::move(rec));
    }
    return trace;
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

PointSet load_points(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return read_points(in, path.string());
}

void save_points(const std::filesystem::path& path, const PointSet& ps) {
  std::ostringstream out;
  write_points(out, ps);
  write_text_file(path, out.str());
}

Graph load_graph(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return read_graph(in, path.string());
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  write_text_file(path, out.str());
}

Solution load_solution(const std::filesystem::path& path) {
  return solution_from_json(read_text_file(path), path.string());
}

void save_solution(const std::filesystem::path& path, const Solution& s) {
  write_text_file(path, solution_to_json(s));
}

}  // namespace liardom
