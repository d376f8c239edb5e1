#include "rabidisp/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

int CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  const int c = column_index(name);
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "no column named '" + name + "'");
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    double v = std::numeric_limits<double>::quiet_NaN();
    if (static_cast<std::size_t>(c) < row.size() && !row[static_cast<std::size_t>(c)].empty()) {
      const std::string& cell = row[static_cast<std::size_t>(c)];
      char* end = nullptr;
      const double parsed = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() && *end == '\0') v = parsed;
    }
    out.push_back(v);
  }
  return out;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      table.header = split(line);
      have_header = true;
    } else {
      table.rows.push_back(split(line));
    }
  }
  if (!have_header) throw Error(ErrorCode::InvalidArgument, "CSV has no header row");
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_csv(in);
}

std::string format_double(double value) {
  char buf[40];
  if (value == 0.0) value = 0.0;  // no negative zero in output
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace rabidisp
