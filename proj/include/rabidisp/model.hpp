#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rabidisp/spectral.hpp"

namespace rabidisp {

// All frequencies are ordinary (/2pi) frequencies in GHz. Rates are MHz.

enum class Interaction { Rabi, JaynesCummings };

enum class Bath { X = 0, Z = 1, R = 2 };

const char* to_string(Interaction model) noexcept;

/// N-level qubit: level energies w_k (w_0 = 0), ladder couplings g_k to the
/// resonator, transverse bath couplings beta_k and dephasing sensitivities
/// dw_k. Accessors are total: indices outside the ladder give 0.
struct QubitSpec {
  std::vector<double> level_energies;
  std::vector<double> couplings;
  std::vector<double> transverse_couplings;
  std::vector<double> dephasing_sensitivities;

  int num_levels() const { return static_cast<int>(level_energies.size()); }

  /// w_{k+1,k}; 0 outside [0, N-2].
  double splitting(int k) const;
  double coupling(int k) const;
  double beta(int k) const;
  double dephasing(int k) const;
};

struct TransmonSpec {
  double omega_10 = 6.0;
  double anharmonicity = 0.25;
  double g0 = 0.1;
  int num_levels = 3;
  // Defaults: beta_k = sqrt(k+1), dw_k = k.
  std::optional<std::vector<double>> beta_override;
  std::optional<std::vector<double>> dephasing_override;
};

/// Transmon ladder: w_{k+1,k} = w_10 - k alpha, g_k = sqrt(k+1) g0.
/// Throws NonPositiveSplitting if any splitting is <= 0.
QubitSpec expand_transmon(const TransmonSpec& spec);

struct ResonatorSpec {
  double omega_r = 5.0;
  int fock_truncation = 10;
};

struct SystemSpec {
  QubitSpec qubit;
  ResonatorSpec resonator;
  Interaction interaction = Interaction::Rabi;
  std::array<SpectralFunction, 3> baths{};

  const SpectralFunction& bath(Bath which) const { return baths[static_cast<int>(which)]; }
  double omega_r() const { return resonator.omega_r; }
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool dispersive_warning = false;

  bool ok() const { return errors.empty(); }
};

/// Checks every invariant of the system and collects all violations with
/// their field paths. Never throws.
ValidationReport validate(const SystemSpec& spec);

/// validate() and throw a Config error carrying every message on failure.
void require_valid(const SystemSpec& spec);

}  // namespace rabidisp
