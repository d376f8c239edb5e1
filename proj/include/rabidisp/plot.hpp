#pragma once

#include <string>
#include <vector>

#include "rabidisp/csv.hpp"

namespace rabidisp {

struct PlotOptions {
  bool log_y = false;
  std::string title;
  int width = 640;
  int height = 420;
};

/// Line chart of ys against x. Output bytes depend only on the inputs.
std::string render_svg(const CsvTable& table, const std::string& x, const std::vector<std::string>& ys,
                       const PlotOptions& options = {});

}  // namespace rabidisp
