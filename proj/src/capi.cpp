#include "rabidisp/rabidisp.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "rabidisp/config.hpp"
#include "rabidisp/csv.hpp"
#include "rabidisp/dispersive.hpp"
#include "rabidisp/error.hpp"
#include "rabidisp/exact.hpp"
#include "rabidisp/fit.hpp"
#include "rabidisp/lindblad.hpp"
#include "rabidisp/plot.hpp"
#include "rabidisp/rates.hpp"

struct rd_system {
  rabidisp::Config config;
  std::vector<std::string> warnings;
};

struct rd_generator {
  rabidisp::SystemSpec spec;
  rabidisp::LindbladGenerator generator;
};

struct rd_trajectory {
  rabidisp::Trajectory trajectory;
};

namespace {

using namespace rabidisp;

thread_local std::string g_last_error;

rd_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return RD_ERR_INVALID_ARGUMENT;
    case ErrorCode::Config: return RD_ERR_CONFIG;
    case ErrorCode::NonPositiveSplitting: return RD_ERR_NONPOSITIVE_SPLITTING;
    case ErrorCode::NegativeFrequency: return RD_ERR_NEGATIVE_FREQUENCY;
    case ErrorCode::ResonantDivergence: return RD_ERR_RESONANT_DIVERGENCE;
    case ErrorCode::AmbiguousLabeling: return RD_ERR_AMBIGUOUS_LABELING;
    case ErrorCode::DimensionOverflow: return RD_ERR_DIMENSION_OVERFLOW;
    case ErrorCode::DimensionMismatch: return RD_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ConvergenceFailure: return RD_ERR_CONVERGENCE;
    case ErrorCode::NoBracket: return RD_ERR_NO_BRACKET;
    case ErrorCode::DegenerateCurvature: return RD_ERR_DEGENERATE_CURVATURE;
    case ErrorCode::NegativeRate: return RD_ERR_NEGATIVE_RATE;
    case ErrorCode::NegativePhotonNumber: return RD_ERR_NEGATIVE_PHOTON_NUMBER;
    case ErrorCode::StepUnderflow: return RD_ERR_STEP_UNDERFLOW;
    case ErrorCode::DegenerateNullSpace: return RD_ERR_DEGENERATE_NULL_SPACE;
    case ErrorCode::TruncationTooSmall: return RD_ERR_TRUNCATION_TOO_SMALL;
    case ErrorCode::Io: return RD_ERR_IO;
  }
  return RD_ERR_INTERNAL;
}

rd_status fail(rd_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
rd_status guarded(F&& body) {
  try {
    body();
    return RD_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RD_ERR_INTERNAL, e.what());
  }
}

#define RD_REQUIRE(cond)                                                           \
  do {                                                                             \
    if (!(cond)) return fail(RD_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

Interaction to_model(rd_model m) { return m == RD_MODEL_JC ? Interaction::JaynesCummings : Interaction::Rabi; }

// The transmon truncated to at most `levels` levels; quantities that only
// involve the lowest transitions stay defined when high levels collapse.
QubitSpec truncated_qubit(const Config& c, int levels) {
  TransmonSpec t = c.transmon;
  t.num_levels = std::min(t.num_levels, std::max(2, levels));
  const auto n = static_cast<std::size_t>(t.num_levels);
  if (t.beta_override && t.beta_override->size() > n - 1) t.beta_override->resize(n - 1);
  if (t.dephasing_override && t.dephasing_override->size() > n) t.dephasing_override->resize(n);
  return expand_transmon(t);
}

}  // namespace

extern "C" {

const char* rd_version(void) { return "1.0.0"; }

const char* rd_last_error(void) { return g_last_error.c_str(); }

const char* rd_status_name(rd_status status) {
  switch (status) {
    case RD_OK: return "ok";
    case RD_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RD_ERR_CONFIG: return "ConfigError";
    case RD_ERR_NONPOSITIVE_SPLITTING: return "NonPositiveSplitting";
    case RD_ERR_NEGATIVE_FREQUENCY: return "NegativeFrequency";
    case RD_ERR_RESONANT_DIVERGENCE: return "ResonantDivergence";
    case RD_ERR_AMBIGUOUS_LABELING: return "AmbiguousLabeling";
    case RD_ERR_DIMENSION_OVERFLOW: return "DimensionOverflow";
    case RD_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case RD_ERR_CONVERGENCE: return "ConvergenceFailure";
    case RD_ERR_NO_BRACKET: return "NoBracket";
    case RD_ERR_DEGENERATE_CURVATURE: return "DegenerateCurvature";
    case RD_ERR_NEGATIVE_RATE: return "NegativeRate";
    case RD_ERR_NEGATIVE_PHOTON_NUMBER: return "NegativePhotonNumber";
    case RD_ERR_STEP_UNDERFLOW: return "StepUnderflow";
    case RD_ERR_DEGENERATE_NULL_SPACE: return "DegenerateNullSpace";
    case RD_ERR_TRUNCATION_TOO_SMALL: return "TruncationTooSmall";
    case RD_ERR_IO: return "IoError";
    case RD_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

rd_status rd_system_from_json_file(const char* path, rd_system** out) {
  RD_REQUIRE(path && out);
  return guarded([&] { *out = new rd_system{load_config(path), {}}; });
}

rd_status rd_system_from_json_string(const char* json, rd_system** out) {
  RD_REQUIRE(json && out);
  return guarded([&] { *out = new rd_system{parse_config(json), {}}; });
}

rd_status rd_system_clone(const rd_system* sys, rd_system** out) {
  RD_REQUIRE(sys && out);
  return guarded([&] { *out = new rd_system(*sys); });
}

void rd_system_free(rd_system* sys) { delete sys; }

rd_status rd_system_set_param(rd_system* sys, rd_param param, double value) {
  RD_REQUIRE(sys && std::isfinite(value));
  Config& c = sys->config;
  switch (param) {
    case RD_PARAM_OMEGA_R:
      RD_REQUIRE(value > 0.0);
      c.resonator.omega_r = value;
      break;
    case RD_PARAM_OMEGA_10: c.transmon.omega_10 = value; break;
    case RD_PARAM_DETUNING: c.transmon.omega_10 = c.resonator.omega_r + value; break;
    case RD_PARAM_ANHARMONICITY: c.transmon.anharmonicity = value; break;
    case RD_PARAM_G0:
      RD_REQUIRE(value >= 0.0);
      c.transmon.g0 = value;
      break;
    case RD_PARAM_TEMPERATURE:
      RD_REQUIRE(value >= 0.0);
      c.set_temperature(value);
      break;
    case RD_PARAM_NUM_QUBIT_LEVELS:
      RD_REQUIRE(value >= 2.0 && value == std::floor(value));
      c.transmon.num_levels = static_cast<int>(value);
      break;
    case RD_PARAM_FOCK_TRUNCATION:
      RD_REQUIRE(value >= 2.0 && value == std::floor(value));
      c.resonator.fock_truncation = static_cast<int>(value);
      break;
    default: return fail(RD_ERR_INVALID_ARGUMENT, "unknown parameter");
  }
  return RD_OK;
}

rd_status rd_system_get_param(const rd_system* sys, rd_param param, double* value) {
  RD_REQUIRE(sys && value);
  const Config& c = sys->config;
  switch (param) {
    case RD_PARAM_OMEGA_R: *value = c.resonator.omega_r; break;
    case RD_PARAM_OMEGA_10: *value = c.transmon.omega_10; break;
    case RD_PARAM_DETUNING: *value = c.transmon.omega_10 - c.resonator.omega_r; break;
    case RD_PARAM_ANHARMONICITY: *value = c.transmon.anharmonicity; break;
    case RD_PARAM_G0: *value = c.transmon.g0; break;
    case RD_PARAM_TEMPERATURE: *value = c.temperature_ghz; break;
    case RD_PARAM_NUM_QUBIT_LEVELS: *value = c.transmon.num_levels; break;
    case RD_PARAM_FOCK_TRUNCATION: *value = c.resonator.fock_truncation; break;
    default: return fail(RD_ERR_INVALID_ARGUMENT, "unknown parameter");
  }
  return RD_OK;
}

rd_status rd_system_set_model(rd_system* sys, rd_model model) {
  RD_REQUIRE(sys);
  sys->config.model = to_model(model);
  return RD_OK;
}

rd_status rd_system_get_model(const rd_system* sys, rd_model* model) {
  RD_REQUIRE(sys && model);
  *model = sys->config.model == Interaction::Rabi ? RD_MODEL_RABI : RD_MODEL_JC;
  return RD_OK;
}

rd_status rd_system_has_bath(const rd_system* sys, rd_bath bath, int* configured) {
  RD_REQUIRE(sys && configured && bath >= RD_BATH_X && bath <= RD_BATH_R);
  const SpectralFunction& sf = sys->config.baths[static_cast<std::size_t>(bath)];
  const auto* flat = std::get_if<Flat>(&sf.model());
  *configured = !(flat && flat->level_mhz == 0.0);
  return RD_OK;
}

rd_status rd_system_validate(rd_system* sys) {
  RD_REQUIRE(sys);
  sys->warnings.clear();
  return guarded([&] {
    const ValidationReport report = validate(sys->config.system());
    sys->warnings = report.warnings;
    if (!report.ok()) {
      std::string msg;
      for (const auto& e : report.errors) msg += (msg.empty() ? "" : "; ") + e;
      throw Error(ErrorCode::Config, msg);
    }
  });
}

size_t rd_system_warning_count(const rd_system* sys) { return sys ? sys->warnings.size() : 0; }

const char* rd_system_warning(const rd_system* sys, size_t index) {
  if (!sys || index >= sys->warnings.size()) return nullptr;
  return sys->warnings[index].c_str();
}

rd_status rd_system_to_json(const rd_system* sys, char* buffer, size_t capacity, size_t* required) {
  RD_REQUIRE(sys);
  return guarded([&] {
    const std::string text = dump_config(sys->config);
    if (required) *required = text.size() + 1;
    if (buffer && capacity > 0) {
      const std::size_t n = std::min(capacity - 1, text.size());
      std::memcpy(buffer, text.data(), n);
      buffer[n] = '\0';
    }
  });
}

rd_status rd_spectral_evaluate(const rd_system* sys, rd_bath bath, double omega, double* value) {
  RD_REQUIRE(sys && value && bath >= RD_BATH_X && bath <= RD_BATH_R);
  return guarded([&] { *value = sys->config.baths[static_cast<std::size_t>(bath)].evaluate(omega); });
}

rd_status rd_dispersive_shifts(const rd_system* sys, rd_shifts* out) {
  RD_REQUIRE(sys && out);
  return guarded([&] {
    const QubitSpec q = truncated_qubit(sys->config, 3);
    const double wr = sys->config.resonator.omega_r;
    rd_shifts s{};
    s.chi0 = chi(q, wr, 0);
    s.xi0 = xi(q, wr, 0);
    s.chi_tilde0 = chi_tilde(q, wr, 0);
    s.pull_rabi = resonator_pull(q, wr, Interaction::Rabi);
    s.pull_jc = resonator_pull(q, wr, Interaction::JaynesCummings);
    s.qshift_rabi = qubit_shift(q, wr, Interaction::Rabi);
    s.qshift_jc = qubit_shift(q, wr, Interaction::JaynesCummings);
    *out = s;
  });
}

rd_status rd_level_shifts(const rd_system* sys, int k, double* chi_out, double* xi_out, double* chi_tilde_out) {
  RD_REQUIRE(sys && chi_out && xi_out && chi_tilde_out);
  return guarded([&] {
    const QubitSpec q = truncated_qubit(sys->config, k + 2);
    const double wr = sys->config.resonator.omega_r;
    *chi_out = chi(q, wr, k);
    *xi_out = xi(q, wr, k);
    *chi_tilde_out = chi_tilde(q, wr, k);
  });
}

rd_status rd_h2_coefficients(const rd_system* sys, rd_model model, int k, double* photon, double* level) {
  RD_REQUIRE(sys && photon && level && k >= 0 && k < sys->config.transmon.num_levels);
  return guarded([&] {
    const QubitSpec q = truncated_qubit(sys->config, k + 2);
    const auto c = h2_coefficients(q, sys->config.resonator.omega_r, to_model(model));
    *photon = c[static_cast<std::size_t>(k)].photon;
    *level = c[static_cast<std::size_t>(k)].level;
  });
}

rd_status rd_prefactors_get(const rd_system* sys, int k, rd_model model, rd_prefactors* out) {
  RD_REQUIRE(sys && out && k >= 0);
  return guarded([&] {
    const QubitSpec q = truncated_qubit(sys->config, k + 2);
    const Prefactors p = prefactors(q, sys->config.resonator.omega_r, k, to_model(model));
    *out = {p.purcell, p.dressed, p.counter, p.assisted};
  });
}

rd_status rd_purcell_rates(const rd_system* sys, int k, rd_model model, double* down, double* up) {
  RD_REQUIRE(sys && down && up && k >= 0);
  return guarded([&] {
    SystemSpec spec = sys->config.system();
    spec.qubit = truncated_qubit(sys->config, k + 2);
    std::tie(*down, *up) = purcell_rates(spec, k, to_model(model));
  });
}

rd_status rd_rates_list(const rd_system* sys, rd_model model, double photons, rd_dissipator* out, size_t capacity,
                        size_t* count) {
  RD_REQUIRE(sys && count);
  return guarded([&] {
    const RateTable table = rate_table(sys->config.system(), to_model(model));
    std::vector<DissipatorTerm> all = table.second_order;
    all.insert(all.end(), table.fourth_order.begin(), table.fourth_order.end());
    const auto driven = driven_effective_rates(table, photons);
    all.insert(all.end(), driven.begin(), driven.end());
    *count = all.size();
    if (!out) return;
    if (capacity < all.size()) throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& t = all[i];
      out[i] = {static_cast<rd_qubit_op>(t.op.qubit), t.op.level, static_cast<rd_photon_op>(t.op.photon),
                static_cast<rd_origin>(t.origin), t.rate};
    }
  });
}

rd_status rd_exact_shifts(const rd_system* sys, rd_model model, double* pull, double* qshift) {
  RD_REQUIRE(sys && pull && qshift);
  return guarded([&] {
    const SystemSpec spec = sys->config.system();
    const ExactShifts s = exact_shifts(spec.qubit, spec.resonator, to_model(model));
    *pull = s.resonator_pull;
    *qshift = s.qubit_shift;
  });
}

rd_status rd_write_hamiltonian_csv(const rd_system* sys, rd_model model, const char* path) {
  RD_REQUIRE(sys && path);
  return guarded([&] {
    const SystemSpec spec = sys->config.system();
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, std::string("cannot write ") + path);
    write_matrix_csv(build_hamiltonian(spec.qubit, spec.resonator, to_model(model)), out);
    if (!out) throw Error(ErrorCode::Io, std::string("write failed: ") + path);
  });
}

rd_status rd_fit_g0(const double* detunings, const double* shifts, size_t count, rd_model model,
                    rd_observable observable, double omega_r, double anharmonicity, int num_levels, rd_fit_result* out,
                    double* residuals) {
  RD_REQUIRE(detunings && shifts && out && omega_r > 0.0 && num_levels >= 2);
  return guarded([&] {
    std::vector<FitPoint> data(count);
    for (std::size_t i = 0; i < count; ++i) data[i] = {detunings[i], shifts[i]};
    const FitResult r = fit_g0(data, to_model(model),
                               observable == RD_OBS_QUBIT ? Observable::Qubit : Observable::Resonator,
                               {omega_r, anharmonicity, num_levels});
    *out = {r.g0, r.stderr_g0, r.residual_sum, r.iterations};
    if (residuals) std::copy(r.residuals.begin(), r.residuals.end(), residuals);
  });
}

rd_status rd_model_shift(double detuning, double g0, rd_model model, rd_observable observable, double omega_r,
                         double anharmonicity, int num_levels, double* shift) {
  RD_REQUIRE(shift && omega_r > 0.0 && num_levels >= 2);
  return guarded([&] {
    *shift = model_shift(detuning, g0, to_model(model),
                         observable == RD_OBS_QUBIT ? Observable::Qubit : Observable::Resonator,
                         {omega_r, anharmonicity, num_levels});
  });
}

rd_status rd_generator_assemble(const rd_system* sys, rd_model model, rd_mode mode, double photons,
                                rd_generator** out) {
  RD_REQUIRE(sys && out);
  return guarded([&] {
    const SystemSpec spec = sys->config.system();
    require_valid(spec);
    const RateTable table = rate_table(spec, to_model(model));
    const GeneratorMode m =
        mode == RD_MODE_BARE_PLUS_INTERACTION ? GeneratorMode::BarePlusInteraction : GeneratorMode::DressedAnalytic;
    const auto driven = driven_effective_rates(table, photons);
    *out = new rd_generator{spec, assemble(spec, table, m, driven)};
  });
}

void rd_generator_free(rd_generator* gen) { delete gen; }

int rd_generator_dim(const rd_generator* gen) { return gen ? gen->generator.dim() : 0; }

rd_status rd_evolve(const rd_generator* gen, const rd_initial_state* init, double t_max_ns, double dt_out_ns,
                    double tolerance, rd_trajectory** out) {
  RD_REQUIRE(gen && init && out);
  return guarded([&] {
    const ProductSpace& space = gen->generator.space();
    CMatrix rho0;
    switch (init->kind) {
      case RD_INIT_GROUND: rho0 = ground_state(space); break;
      case RD_INIT_FOCK: rho0 = fock_state(space, init->level, init->photons); break;
      case RD_INIT_THERMAL: rho0 = thermal_state(gen->spec, space, init->temperature); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown initial state");
    }
    *out = new rd_trajectory{evolve(gen->generator, rho0, {t_max_ns, dt_out_ns, tolerance})};
  });
}

void rd_trajectory_free(rd_trajectory* traj) { delete traj; }

size_t rd_trajectory_size(const rd_trajectory* traj) { return traj ? traj->trajectory.times.size() : 0; }

double rd_trajectory_time(const rd_trajectory* traj, size_t step) {
  if (!traj || step >= traj->trajectory.times.size()) return NAN;
  return traj->trajectory.times[step];
}

rd_status rd_trajectory_element(const rd_trajectory* traj, size_t step, int row, int col, double* re, double* im) {
  RD_REQUIRE(traj && re && im && step < traj->trajectory.states.size());
  const CMatrix& rho = traj->trajectory.states[step];
  RD_REQUIRE(row >= 0 && col >= 0 && row < rho.rows() && col < rho.cols());
  *re = rho(row, col).real();
  *im = rho(row, col).imag();
  return RD_OK;
}

rd_status rd_steady_state(const rd_generator* gen, double* re, double* im, size_t capacity) {
  RD_REQUIRE(gen && re && im);
  const auto d = static_cast<size_t>(gen->generator.dim());
  RD_REQUIRE(capacity >= d * d);
  return guarded([&] {
    const CMatrix rho = steady_state(gen->generator);
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) {
        re[r * d + c] = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).real();
        im[r * d + c] = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)).imag();
      }
    }
  });
}

rd_status rd_verify_displacement_identity(double alpha_re, double alpha_im, int k, int qubit_dim, int fock_dim,
                                          double* deviation, double* effective_rate) {
  RD_REQUIRE(deviation && qubit_dim >= 2 && fock_dim >= 2);
  return guarded([&] {
    const DisplacementCheck c = verify_displacement_identity({alpha_re, alpha_im}, k, {qubit_dim, fock_dim});
    *deviation = c.deviation;
    if (effective_rate) *effective_rate = c.effective_rate;
  });
}

rd_status rd_plot_svg(const char* csv_path, const char* x_column, const char* const* y_columns, size_t y_count,
                      int log_y, const char* svg_path) {
  RD_REQUIRE(csv_path && x_column && y_columns && y_count > 0 && svg_path);
  return guarded([&] {
    const CsvTable table = read_csv_file(csv_path);
    std::vector<std::string> ys(y_columns, y_columns + y_count);
    PlotOptions opt;
    opt.log_y = log_y != 0;
    const std::string svg = render_svg(table, x_column, ys, opt);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, std::string("cannot write ") + svg_path);
    out << svg;
    if (!out) throw Error(ErrorCode::Io, std::string("write failed: ") + svg_path);
  });
}

}  // extern "C"
