#include "liardom/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace liardom {

std::optional<double> RunReport::ratio() const {
  if (!opt || *opt == 0) return std::nullopt;
  return static_cast<double>(size) / static_cast<double>(*opt);
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& value) {
  if (!value) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*value);
  } else {
    return std::to_string(*value);
  }
}

std::string quoted(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_report(std::ostream& out, std::vector<RunReport> rows, const CsvOptions& options) {
  std::stable_sort(rows.begin(), rows.end(), [](const RunReport& a, const RunReport& b) {
    return std::tie(a.instance, a.solver) < std::tie(b.instance, b.solver);
  });
  out << kReportHeader << '\n';
  for (const auto& r : rows) {
    out << quoted(r.instance) << ',' << quoted(r.solver) << ',' << r.n << ',' << r.size << ','
        << cell(r.opt) << ',' << cell(r.ratio()) << ',' << cell(r.repair) << ','
        << (options.timing ? cell(r.wall_ms) : std::string{}) << ',' << cell(r.max_iter_add) << ','
        << cell(r.max_rhat) << '\n';
  }
}

void emit_report(const std::vector<RunReport>& rows, const std::filesystem::path& path,
                 const CsvOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_report(out, rows, options);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace liardom
