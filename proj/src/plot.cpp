#include "rabidisp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const CsvTable& table, const std::string& x_name, const std::vector<std::string>& ys,
                       const PlotOptions& opt) {
  if (ys.empty()) throw Error(ErrorCode::InvalidArgument, "no y columns to plot");
  const std::vector<double> x = table.numeric_column(x_name);
  std::vector<std::vector<double>> series;
  for (const auto& name : ys) {
    std::vector<double> y = table.numeric_column(name);
    if (opt.log_y) {
      for (double& v : y) v = v > 0.0 ? std::log10(v) : std::numeric_limits<double>::quiet_NaN();
    }
    series.push_back(std::move(y));
  }

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!std::isfinite(x[i]) || !std::isfinite(series[s][i])) continue;
      x_lo = std::min(x_lo, x[i]);
      x_hi = std::max(x_hi, x[i]);
      y_lo = std::min(y_lo, series[s][i]);
      y_hi = std::max(y_hi, series[s][i]);
    }
  }
  if (!std::isfinite(x_lo)) throw Error(ErrorCode::InvalidArgument, "nothing finite to plot");
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }

  const double left = 80, right = 20, top = 40, bottom = 50;
  const double pw = opt.width - left - right;
  const double ph = opt.height - top - bottom;
  auto px = [&](double v) { return left + (v - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double v) { return top + (1.0 - (v - y_lo) / (y_hi - y_lo)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"white\"/>\n";
  if (!opt.title.empty()) {
    svg << "<text x=\"" << fixed(opt.width / 2.0) << "\" y=\"20\" text-anchor=\"middle\">" << escape(opt.title)
        << "</text>\n";
  }
  svg << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw) << "\" height=\""
      << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
    const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
    svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(top + ph + 16) << "\" text-anchor=\"middle\">"
        << tick_label(xv) << "</text>\n";
    const std::string ylabel = opt.log_y ? "1e" + tick_label(yv) : tick_label(yv);
    svg << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(yv) + 4) << "\" text-anchor=\"end\">" << ylabel
        << "</text>\n";
  }
  svg << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(opt.height - 8.0)
      << "\" text-anchor=\"middle\">" << escape(x_name) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % std::size(kColors)];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
            << "\"/>\n";
      }
      points.clear();
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!std::isfinite(x[i]) || !std::isfinite(series[s][i])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += fixed(px(x[i])) + "," + fixed(py(series[s][i]));
    }
    flush();
    const double ly = top + 14.0 + 14.0 * static_cast<double>(s);
    svg << "<line x1=\"" << fixed(left + pw - 120) << "\" y1=\"" << fixed(ly - 4) << "\" x2=\""
        << fixed(left + pw - 100) << "\" y2=\"" << fixed(ly - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << fixed(left + pw - 95) << "\" y=\"" << fixed(ly) << "\">" << escape(ys[s]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rabidisp
