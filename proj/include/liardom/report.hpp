#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace liardom {

/// One solver run on one instance. ratio() is defined iff opt is.
struct RunReport {
  std::string instance;
  std::string solver;
  std::size_t n = 0;
  std::size_t size = 0;
  std::optional<int> opt;
  std::optional<int> repair;
  std::optional<double> wall_ms;
  std::optional<int> max_iter_add;  // LDS sweep only
  std::optional<int> max_rhat;      // PTAS only

  std::optional<double> ratio() const;
};

inline constexpr const char* kReportHeader =
    "instance,solver,n,size,opt,ratio,repair,wall_ms,max_iter_add,max_rhat";

struct CsvOptions {
  /// Leave wall_ms blank so that reruns are byte-identical.
  bool timing = true;
};

/// Rows are written sorted by (instance, solver); the sort is stable.
void write_report(std::ostream& out, std::vector<RunReport> rows, const CsvOptions& options = {});
/// Throws std::runtime_error naming the path on I/O failure.
void emit_report(const std::vector<RunReport>& rows, const std::filesystem::path& path,
                 const CsvOptions& options = {});

/// Shortest round-trip decimal form of a finite double.
std::string format_double(double value);

}  // namespace liardom
