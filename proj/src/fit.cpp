#include "rabidisp/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rabidisp/dispersive.hpp"
#include "rabidisp/error.hpp"

namespace rabidisp {

double model_shift(double detuning, double g0, Interaction model, Observable observable, const FitFixed& fixed) {
  // Only levels 0..2 enter the second-order observables.
  TransmonSpec t;
  t.omega_10 = fixed.omega_r + detuning;
  t.anharmonicity = fixed.anharmonicity;
  t.g0 = g0;
  t.num_levels = std::min(fixed.num_levels, 3);
  const QubitSpec q = expand_transmon(t);
  return observable == Observable::Resonator ? resonator_pull(q, fixed.omega_r, model)
                                             : qubit_shift(q, fixed.omega_r, model);
}

GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                     int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iter = 0;
  while (iter < max_iter && std::abs(b - a) > rel_tol * (std::abs(c) + std::abs(d))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iter;
  }
  return fc < fd ? GoldenResult{c, fc, iter} : GoldenResult{d, fd, iter};
}

FitResult fit_g0(std::span<const FitPoint> data, Interaction model, Observable observable, const FitFixed& fixed) {
  if (data.size() < 3) throw Error(ErrorCode::InvalidArgument, "fit needs at least 3 points");
  for (const auto& p : data) {
    if (!std::isfinite(p.detuning) || !std::isfinite(p.shift)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite data point");
    }
    model_shift(p.detuning, 1.0, model, observable, fixed);  // throws inside the resonance window
  }
  auto sse = [&](double g0) {
    double s = 0.0;
    for (const auto& p : data) {
      const double r = model_shift(p.detuning, g0, model, observable, fixed) - p.shift;
      s += r * r;
    }
    return s;
  };

  // Coarse geometric scan to bracket the minimum over g0 > 0.
  constexpr int kScan = 241;
  constexpr double kLo = 1e-5;
  constexpr double kHi = 10.0;
  std::vector<double> grid(kScan);
  std::vector<double> values(kScan);
  for (int i = 0; i < kScan; ++i) {
    grid[static_cast<std::size_t>(i)] = kLo * std::pow(kHi / kLo, static_cast<double>(i) / (kScan - 1));
    values[static_cast<std::size_t>(i)] = sse(grid[static_cast<std::size_t>(i)]);
  }
  const auto best = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
  if (best == 0 || best == kScan - 1) {
    throw Error(ErrorCode::NoBracket, "least-squares minimum not bracketed in [1e-5, 10] GHz");
  }
  const GoldenResult min = golden_section_minimize(sse, grid[static_cast<std::size_t>(best - 1)],
                                                   grid[static_cast<std::size_t>(best + 1)]);

  FitResult out;
  out.g0 = min.x;
  out.residual_sum = min.fx;
  out.iterations = min.iterations;
  for (const auto& p : data) out.residuals.push_back(p.shift - model_shift(p.detuning, min.x, model, observable, fixed));

  const double h = 1e-4 * min.x;
  const double curvature = (sse(min.x + h) - 2.0 * min.fx + sse(min.x - h)) / (h * h);
  if (!std::isfinite(curvature) || curvature <= 0.0) {
    throw Error(ErrorCode::DegenerateCurvature, "residual sum has no positive curvature at the minimum");
  }
  const double variance = min.fx / static_cast<double>(data.size() - 1);
  out.stderr_g0 = std::sqrt(2.0 * variance / curvature);
  return out;
}

}  // namespace rabidisp
