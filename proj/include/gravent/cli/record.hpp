#pragma once

// Flat, plot-ready output of one CLI run. Every file carries the full input
// set, so a run can be repeated from its own output.

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gravent::cli {

using Cell = std::variant<double, std::string>;

struct RunRecord {
  std::string command;
  std::string version;
  double wall_clock_s = 0.0;
  /// Every option value of the run, as text, in a stable order.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> warnings;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  const std::string* input(const std::string& key) const;
  /// Index of a named column, or -1.
  int column(const std::string& name) const;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

/// Shortest text that reads back to the same double (%.17g, with inf/nan
/// spelled out).
std::string format_double(double x);

/// CSV: a `# key: value` header block, a column line, then rows. The body
/// below the header is byte-identical for identical inputs.
std::string to_csv(const RunRecord& r);
std::string to_json(const RunRecord& r);

/// Parses either format back; the format is sniffed from the first byte.
RunRecord parse_record(const std::string& text);

void write_record(const RunRecord& r, Format format, const std::string& path);
RunRecord read_record(const std::string& path);

}  // namespace gravent::cli
