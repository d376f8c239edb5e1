#include "rabidisp/dispersive.hpp"

#include <cmath>
#include <sstream>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

bool in_ladder(const QubitSpec& q, int k) { return k >= 0 && k + 1 < q.num_levels(); }

void check_denominator(double den, double tol, int k, const char* what) {
  if (std::abs(den) < tol) {
    std::ostringstream msg;
    msg << what << " denominator " << den << " GHz at level " << k;
    throw ResonanceError(k, msg.str());
  }
}

}  // namespace

double chi(const QubitSpec& q, double wr, int k, double tol) {
  const double g = q.coupling(k);
  if (!in_ladder(q, k) || g == 0.0) return 0.0;
  const double den = q.splitting(k) - wr;
  check_denominator(den, tol, k, "chi");
  return g * g / den;
}

double xi(const QubitSpec& q, double wr, int k, double tol) {
  const double g = q.coupling(k);
  if (!in_ladder(q, k) || g == 0.0) return 0.0;
  const double den = q.splitting(k) + wr;
  check_denominator(den, tol, k, "xi");
  return g * g / den;
}

double chi_tilde(const QubitSpec& q, double wr, int k, double tol) {
  const double g = q.coupling(k);
  if (!in_ladder(q, k) || g == 0.0) return 0.0;
  const double w = q.splitting(k);
  check_denominator(w - wr, tol, k, "chi_tilde");
  check_denominator(w + wr, tol, k, "chi_tilde");
  return 2.0 * g * g * w / ((w - wr) * (w + wr));
}

std::vector<H2Coefficients> h2_coefficients(const QubitSpec& q, double wr, Interaction model, double tol) {
  std::vector<H2Coefficients> out(static_cast<std::size_t>(q.num_levels()));
  for (int k = 0; k < q.num_levels(); ++k) {
    H2Coefficients& c = out[static_cast<std::size_t>(k)];
    if (model == Interaction::Rabi) {
      c.photon = chi_tilde(q, wr, k - 1, tol) - chi_tilde(q, wr, k, tol);
      c.level = chi(q, wr, k - 1, tol) - xi(q, wr, k, tol);
    } else {
      c.photon = chi(q, wr, k - 1, tol) - chi(q, wr, k, tol);
      c.level = chi(q, wr, k - 1, tol);
    }
  }
  return out;
}

double resonator_pull(const QubitSpec& q, double wr, Interaction model, double tol) {
  return model == Interaction::Rabi ? -chi_tilde(q, wr, 0, tol) : -chi(q, wr, 0, tol);
}

double qubit_shift(const QubitSpec& q, double wr, Interaction model, double tol) {
  if (model == Interaction::JaynesCummings) return chi(q, wr, 0, tol);
  return chi(q, wr, 0, tol) - xi(q, wr, 1, tol) + xi(q, wr, 0, tol);
}

ShiftReport shift_report(const QubitSpec& q, double wr, double tol) {
  ShiftReport r;
  for (int k = 0; k + 1 < q.num_levels(); ++k) {
    r.chi.push_back(chi(q, wr, k, tol));
    r.xi.push_back(xi(q, wr, k, tol));
    r.chi_tilde.push_back(chi_tilde(q, wr, k, tol));
  }
  r.resonator_pull_rabi = resonator_pull(q, wr, Interaction::Rabi, tol);
  r.resonator_pull_jc = resonator_pull(q, wr, Interaction::JaynesCummings, tol);
  r.qubit_shift_rabi = qubit_shift(q, wr, Interaction::Rabi, tol);
  r.qubit_shift_jc = qubit_shift(q, wr, Interaction::JaynesCummings, tol);
  r.h2_rabi = h2_coefficients(q, wr, Interaction::Rabi, tol);
  r.h2_jc = h2_coefficients(q, wr, Interaction::JaynesCummings, tol);
  return r;
}

}  // namespace rabidisp
