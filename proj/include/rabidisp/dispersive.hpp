#pragma once

#include <vector>

#include "rabidisp/model.hpp"

namespace rabidisp {

inline constexpr double kResonanceTolerance = 1e-6;  // GHz

// Second-order dispersive corrections. Level indices outside [0, N-2]
// contribute exactly zero. A vanishing denominator with nonzero coupling
// throws ResonanceError.

/// Jaynes-Cummings dispersive shift g_k^2 / (w_{k+1,k} - w_r).
double chi(const QubitSpec& qubit, double omega_r, int k, double tol = kResonanceTolerance);
/// Bloch-Siegert shift g_k^2 / (w_{k+1,k} + w_r).
double xi(const QubitSpec& qubit, double omega_r, int k, double tol = kResonanceTolerance);
/// Rabi dispersive shift 2 g_k^2 w_{k+1,k} / (w_{k+1,k}^2 - w_r^2) = chi_k + xi_k.
double chi_tilde(const QubitSpec& qubit, double omega_r, int k, double tol = kResonanceTolerance);

/// Diagonal H2 entry for level k: photon * a^dag a sigma_kk + level * sigma_kk.
struct H2Coefficients {
  double photon = 0.0;
  double level = 0.0;
};

std::vector<H2Coefficients> h2_coefficients(const QubitSpec& qubit, double omega_r, Interaction model,
                                            double tol = kResonanceTolerance);

/// One-photon energy correction with the qubit in its ground state:
/// -chi_tilde_0 (Rabi) or -chi_0 (JC).
double resonator_pull(const QubitSpec& qubit, double omega_r, Interaction model,
                      double tol = kResonanceTolerance);

/// Correction to the 0-1 qubit transition with the resonator empty:
/// chi_0 - xi_1 + xi_0 (Rabi) or chi_0 (JC).
double qubit_shift(const QubitSpec& qubit, double omega_r, Interaction model,
                   double tol = kResonanceTolerance);

struct ShiftReport {
  std::vector<double> chi;
  std::vector<double> xi;
  std::vector<double> chi_tilde;
  double resonator_pull_rabi = 0.0;
  double resonator_pull_jc = 0.0;
  double qubit_shift_rabi = 0.0;
  double qubit_shift_jc = 0.0;
  std::vector<H2Coefficients> h2_rabi;
  std::vector<H2Coefficients> h2_jc;
};

ShiftReport shift_report(const QubitSpec& qubit, double omega_r, double tol = kResonanceTolerance);

}  // namespace rabidisp
