#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rabidisp {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column, -1 if missing.
  int column_index(const std::string& name) const;
  /// Numeric column; non-numeric or empty cells become NaN.
  std::vector<double> numeric_column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// 17 significant digits, locale independent.
std::string format_double(double value);

}  // namespace rabidisp
