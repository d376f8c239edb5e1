#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rabidisp/model.hpp"

namespace rabidisp {

enum class Observable { Resonator, Qubit };

struct FitPoint {
  double detuning = 0.0;  // w_10 - w_r, GHz
  double shift = 0.0;     // observed correction, GHz
};

/// Parameters held fixed while g0 is fitted.
struct FitFixed {
  double omega_r = 5.0;
  double anharmonicity = 0.25;
  int num_levels = 3;
};

struct FitResult {
  double g0 = 0.0;
  double stderr_g0 = 0.0;
  double residual_sum = 0.0;  // sum of squared residuals at g0
  std::vector<double> residuals;
  int iterations = 0;
};

/// Analytic dispersive shift of a transmon with coupling g0 at the given detuning.
double model_shift(double detuning, double g0, Interaction model, Observable observable, const FitFixed& fixed);

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Golden-section minimization of f on [lo, hi] until the bracket is
/// narrower than rel_tol * |x|.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double rel_tol = 1e-14, int max_iter = 500);

/// Least-squares fit of g0 > 0. Errors: InvalidArgument (< 3 points),
/// ResonantDivergence, NoBracket, DegenerateCurvature.
FitResult fit_g0(std::span<const FitPoint> data, Interaction model, Observable observable, const FitFixed& fixed);

}  // namespace rabidisp
