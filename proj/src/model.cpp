#include "rabidisp/model.hpp"

#include <cmath>
#include <sstream>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

double at_or_zero(const std::vector<double>& v, int k) {
  return (k >= 0 && k < static_cast<int>(v.size())) ? v[static_cast<std::size_t>(k)] : 0.0;
}

}  // namespace

const char* to_string(Interaction model) noexcept {
  return model == Interaction::Rabi ? "rabi" : "jc";
}

double QubitSpec::splitting(int k) const {
  if (k < 0 || k + 1 >= num_levels()) return 0.0;
  return level_energies[static_cast<std::size_t>(k + 1)] - level_energies[static_cast<std::size_t>(k)];
}

double QubitSpec::coupling(int k) const { return at_or_zero(couplings, k); }
double QubitSpec::beta(int k) const { return at_or_zero(transverse_couplings, k); }
double QubitSpec::dephasing(int k) const { return at_or_zero(dephasing_sensitivities, k); }

QubitSpec expand_transmon(const TransmonSpec& spec) {
  if (spec.num_levels < 2) throw Error(ErrorCode::InvalidArgument, "transmon needs at least 2 levels");
  const int n = spec.num_levels;
  QubitSpec q;
  q.level_energies.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    const double split = spec.omega_10 - k * spec.anharmonicity;
    if (!(split > 0.0)) {
      std::ostringstream msg;
      msg << "splitting w_{" << k + 1 << "," << k << "} = " << split << " GHz";
      throw Error(ErrorCode::NonPositiveSplitting, msg.str());
    }
    q.level_energies[static_cast<std::size_t>(k + 1)] = q.level_energies[static_cast<std::size_t>(k)] + split;
    q.couplings.push_back(std::sqrt(k + 1.0) * spec.g0);
  }
  if (spec.beta_override) {
    q.transverse_couplings = *spec.beta_override;
  } else {
    for (int k = 0; k + 1 < n; ++k) q.transverse_couplings.push_back(std::sqrt(k + 1.0));
  }
  if (spec.dephasing_override) {
    q.dephasing_sensitivities = *spec.dephasing_override;
  } else {
    for (int k = 0; k < n; ++k) q.dephasing_sensitivities.push_back(static_cast<double>(k));
  }
  return q;
}

ValidationReport validate(const SystemSpec& spec) {
  ValidationReport report;
  auto error = [&](const std::string& path, const std::string& what) {
    report.errors.push_back(path + ": " + what);
  };
  const QubitSpec& q = spec.qubit;
  const int n = q.num_levels();
  if (n < 2) error("qubit.num_levels", "must be >= 2");
  if (n >= 1 && q.level_energies[0] != 0.0) error("qubit.level_energies[0]", "must be 0");
  for (int k = 0; k + 1 < n; ++k) {
    if (!(q.splitting(k) > 0.0)) {
      error("qubit.level_energies[" + std::to_string(k + 1) + "]", "levels must increase strictly");
    }
  }
  const std::size_t transitions = n >= 1 ? static_cast<std::size_t>(n - 1) : 0;
  if (q.couplings.size() != transitions) error("qubit.couplings", "expected N-1 entries");
  if (q.transverse_couplings.size() != transitions) error("qubit.transverse_couplings", "expected N-1 entries");
  if (q.dephasing_sensitivities.size() != static_cast<std::size_t>(n)) {
    error("qubit.dephasing_sensitivities", "expected N entries");
  }
  for (std::size_t k = 0; k < q.couplings.size(); ++k) {
    if (!(q.couplings[k] >= 0.0)) error("qubit.couplings[" + std::to_string(k) + "]", "must be >= 0");
  }
  if (!(spec.resonator.omega_r > 0.0)) error("resonator.omega_r", "must be > 0");
  if (spec.resonator.fock_truncation < 2) error("resonator.fock_truncation", "must be >= 2");
  if (!report.ok()) return report;

  const double wr = spec.resonator.omega_r;
  const double detuning = std::abs(q.splitting(0) - wr);
  if (q.coupling(0) > 0.0 && (detuning == 0.0 || q.coupling(0) / detuning > 0.1)) {
    report.dispersive_warning = true;
    report.warnings.push_back("outside the dispersive regime: g0 / |w10 - wr| > 0.1");
  }
  for (int k = 0; k + 1 < n; ++k) {
    const double gk = q.coupling(k);
    if (gk > 0.0 && std::abs(q.splitting(k) - wr) < 10.0 * gk) {
      report.warnings.push_back("transition " + std::to_string(k) + " within 10 g_k of the resonator");
    }
  }
  return report;
}

void require_valid(const SystemSpec& spec) {
  const ValidationReport report = validate(spec);
  if (report.ok()) return;
  std::string msg;
  for (const auto& e : report.errors) msg += (msg.empty() ? "" : "; ") + e;
  throw Error(ErrorCode::Config, msg);
}

}  // namespace rabidisp
