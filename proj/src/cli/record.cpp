#include "gravent/cli/record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gravent/errors.hpp"

namespace gravent::cli {

namespace {

using nlohmann::json;

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

Cell parse_cell(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text.empty()) return text;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() + text.size()) return v;
  return text;
}

json cell_to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);
  }
  return std::get<std::string>(c);
}

Cell cell_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf" || s == "-inf" || s == "nan") return parse_cell(s);
  return s;
}

RunRecord parse_csv(const std::string& text) {
  RunRecord r;
  std::istringstream in(text);
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      const std::string key = line.substr(2, colon - 2);
      const std::string value = line.substr(colon + 2);
      if (key == "command") r.command = value;
      else if (key == "version") r.version = value;
      else if (key == "wall_clock_s") r.wall_clock_s = std::stod(value);
      else if (key == "warning") r.warnings.push_back(value);
      else if (key.rfind("input.", 0) == 0)
        r.inputs.emplace_back(key.substr(6), value);
      continue;
    }
    const auto fields = split_csv(line);
    if (!have_columns) {
      r.columns = fields;
      have_columns = true;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& f : fields) row.push_back(parse_cell(f));
    r.rows.push_back(std::move(row));
  }
  return r;
}

RunRecord parse_json(const std::string& text) {
  const json j = json::parse(text);
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.wall_clock_s = j.at("wall_clock_s").get<double>();
  for (const auto& item : j.at("inputs"))
    r.inputs.emplace_back(item.at(0).get<std::string>(),
                          item.at(1).get<std::string>());
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    std::vector<Cell> cells;
    for (const auto& c : row) cells.push_back(cell_from_json(c));
    r.rows.push_back(std::move(cells));
  }
  return r;
}

}  // namespace

const std::string* RunRecord::input(const std::string& key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return &v;
  return nullptr;
}

int RunRecord::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidParameter("unknown output format '" + text + "'");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const RunRecord& r) {
  std::ostringstream out;
  out << "# command: " << r.command << '\n'
      << "# version: " << r.version << '\n'
      << "# wall_clock_s: " << format_double(r.wall_clock_s) << '\n';
  for (const auto& [k, v] : r.inputs) out << "# input." << k << ": " << v << '\n';
  for (const auto& w : r.warnings) out << "# warning: " << w << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i)
    out << (i ? "," : "") << quote_csv(r.columns[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* d = std::get_if<double>(&row[i]))
        out << format_double(*d);
      else
        out << quote_csv(std::get<std::string>(row[i]));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const RunRecord& r) {
  json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["wall_clock_s"] = r.wall_clock_s;
  j["inputs"] = json::array();
  for (const auto& [k, v] : r.inputs) j["inputs"].push_back({k, v});
  j["warnings"] = r.warnings;
  j["columns"] = r.columns;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json cells = json::array();
    for (const auto& c : row) cells.push_back(cell_to_json(c));
    j["rows"].push_back(std::move(cells));
  }
  return j.dump(1) + "\n";
}

RunRecord parse_record(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_csv(text);
}

void write_record(const RunRecord& r, Format format, const std::string& path) {
  const std::string body = format == Format::Csv ? to_csv(r) : to_json(r);
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot open output file '" + path + "'");
  out << body;
}

RunRecord read_record(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open record '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_record(text.str());
}

}  // namespace gravent::cli
