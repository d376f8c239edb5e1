/* C interface to the rabidisp library. All frequencies are ordinary (/2pi)
 * frequencies in GHz, rates are MHz, times are ns.
 *
 * Every function returning rd_status leaves a thread-local message that
 * rd_last_error() returns until the next failing call on the same thread.
 * Handles are not synchronized; use one handle per thread or clone. */
#ifndef RABIDISP_H
#define RABIDISP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RABIDISP_BUILD)
#    define RD_API __declspec(dllexport)
#  else
#    define RD_API __declspec(dllimport)
#  endif
#else
#  define RD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_INVALID_ARGUMENT,
  RD_ERR_CONFIG,
  RD_ERR_NONPOSITIVE_SPLITTING,
  RD_ERR_NEGATIVE_FREQUENCY,
  RD_ERR_RESONANT_DIVERGENCE,
  RD_ERR_AMBIGUOUS_LABELING,
  RD_ERR_DIMENSION_OVERFLOW,
  RD_ERR_DIMENSION_MISMATCH,
  RD_ERR_CONVERGENCE,
  RD_ERR_NO_BRACKET,
  RD_ERR_DEGENERATE_CURVATURE,
  RD_ERR_NEGATIVE_RATE,
  RD_ERR_NEGATIVE_PHOTON_NUMBER,
  RD_ERR_STEP_UNDERFLOW,
  RD_ERR_DEGENERATE_NULL_SPACE,
  RD_ERR_TRUNCATION_TOO_SMALL,
  RD_ERR_IO,
  RD_ERR_INTERNAL
} rd_status;

typedef enum rd_model { RD_MODEL_RABI = 0, RD_MODEL_JC = 1 } rd_model;

typedef enum rd_bath { RD_BATH_X = 0, RD_BATH_Z = 1, RD_BATH_R = 2 } rd_bath;

typedef enum rd_param {
  RD_PARAM_OMEGA_R = 0,
  RD_PARAM_OMEGA_10,
  RD_PARAM_DETUNING, /* omega_10 - omega_r; setting it moves omega_10 */
  RD_PARAM_ANHARMONICITY,
  RD_PARAM_G0,
  RD_PARAM_TEMPERATURE, /* sets every bath temperature */
  RD_PARAM_NUM_QUBIT_LEVELS,
  RD_PARAM_FOCK_TRUNCATION
} rd_param;

typedef enum rd_observable { RD_OBS_RESONATOR = 0, RD_OBS_QUBIT = 1 } rd_observable;

typedef enum rd_mode { RD_MODE_DRESSED_ANALYTIC = 0, RD_MODE_BARE_PLUS_INTERACTION = 1 } rd_mode;

typedef enum rd_qubit_op { RD_QOP_IDENTITY = 0, RD_QOP_LOWER, RD_QOP_RAISE, RD_QOP_PROJECT } rd_qubit_op;
typedef enum rd_photon_op { RD_POP_NONE = 0, RD_POP_ANNIHILATE, RD_POP_CREATE } rd_photon_op;
typedef enum rd_origin {
  RD_ORIGIN_SECOND_ORDER = 0,
  RD_ORIGIN_PURCELL,
  RD_ORIGIN_DRESSED_DEPHASING,
  RD_ORIGIN_PHOTON_ASSISTED_DEPHASING,
  RD_ORIGIN_DRIVEN_EFFECTIVE
} rd_origin;

typedef struct rd_system rd_system;
typedef struct rd_generator rd_generator;
typedef struct rd_trajectory rd_trajectory;

typedef struct rd_shifts {
  double chi0, xi0, chi_tilde0;
  double pull_rabi, pull_jc;
  double qshift_rabi, qshift_jc;
} rd_shifts;

typedef struct rd_prefactors {
  double p, d, c, a;
} rd_prefactors;

typedef struct rd_dissipator {
  rd_qubit_op qubit_op;
  int level;
  rd_photon_op photon_op;
  rd_origin origin;
  double rate_mhz;
} rd_dissipator;

typedef struct rd_fit_result {
  double g0;
  double stderr_g0;
  double residual_sum;
  int iterations;
} rd_fit_result;

typedef enum rd_initial_kind { RD_INIT_GROUND = 0, RD_INIT_FOCK, RD_INIT_THERMAL } rd_initial_kind;

typedef struct rd_initial_state {
  rd_initial_kind kind;
  int level;          /* RD_INIT_FOCK */
  int photons;        /* RD_INIT_FOCK */
  double temperature; /* RD_INIT_THERMAL, GHz */
} rd_initial_state;

RD_API const char* rd_version(void);
RD_API const char* rd_last_error(void);
RD_API const char* rd_status_name(rd_status status);

/* ---- system ---------------------------------------------------------- */
RD_API rd_status rd_system_from_json_file(const char* path, rd_system** out);
RD_API rd_status rd_system_from_json_string(const char* json, rd_system** out);
RD_API rd_status rd_system_clone(const rd_system* sys, rd_system** out);
RD_API void rd_system_free(rd_system* sys);
RD_API rd_status rd_system_set_param(rd_system* sys, rd_param param, double value);
RD_API rd_status rd_system_get_param(const rd_system* sys, rd_param param, double* value);
RD_API rd_status rd_system_set_model(rd_system* sys, rd_model model);
RD_API rd_status rd_system_get_model(const rd_system* sys, rd_model* model);
RD_API rd_status rd_system_has_bath(const rd_system* sys, rd_bath bath, int* configured);
/* Validates and stores warnings; RD_ERR_CONFIG if any invariant fails. */
RD_API rd_status rd_system_validate(rd_system* sys);
RD_API size_t rd_system_warning_count(const rd_system* sys);
RD_API const char* rd_system_warning(const rd_system* sys, size_t index);
RD_API rd_status rd_system_to_json(const rd_system* sys, char* buffer, size_t capacity, size_t* required);

/* ---- spectra and analytic corrections -------------------------------- */
RD_API rd_status rd_spectral_evaluate(const rd_system* sys, rd_bath bath, double omega_ghz, double* value_mhz);
RD_API rd_status rd_dispersive_shifts(const rd_system* sys, rd_shifts* out);
RD_API rd_status rd_level_shifts(const rd_system* sys, int k, double* chi, double* xi, double* chi_tilde);
RD_API rd_status rd_h2_coefficients(const rd_system* sys, rd_model model, int k, double* photon, double* level);
RD_API rd_status rd_prefactors_get(const rd_system* sys, int k, rd_model model, rd_prefactors* out);
RD_API rd_status rd_purcell_rates(const rd_system* sys, int k, rd_model model, double* down, double* up);
/* All second- and fourth-order dissipators of `model` followed by the driven
 * effective rates for `photons` (none when photons == 0). Call with
 * out == NULL to query *count. */
RD_API rd_status rd_rates_list(const rd_system* sys, rd_model model, double photons, rd_dissipator* out,
                               size_t capacity, size_t* count);

/* ---- exact diagonalization and fitting ------------------------------- */
RD_API rd_status rd_exact_shifts(const rd_system* sys, rd_model model, double* pull, double* qshift);
RD_API rd_status rd_write_hamiltonian_csv(const rd_system* sys, rd_model model, const char* path);
RD_API rd_status rd_fit_g0(const double* detunings, const double* shifts, size_t count, rd_model model,
                           rd_observable observable, double omega_r, double anharmonicity, int num_levels,
                           rd_fit_result* out, double* residuals /* count entries, may be NULL */);
RD_API rd_status rd_model_shift(double detuning, double g0, rd_model model, rd_observable observable,
                                double omega_r, double anharmonicity, int num_levels, double* shift);

/* ---- master equation -------------------------------------------------- */
RD_API rd_status rd_generator_assemble(const rd_system* sys, rd_model model, rd_mode mode, double photons,
                                       rd_generator** out);
RD_API void rd_generator_free(rd_generator* gen);
RD_API int rd_generator_dim(const rd_generator* gen);
RD_API rd_status rd_evolve(const rd_generator* gen, const rd_initial_state* init, double t_max_ns, double dt_out_ns,
                           double tolerance, rd_trajectory** out);
RD_API void rd_trajectory_free(rd_trajectory* traj);
RD_API size_t rd_trajectory_size(const rd_trajectory* traj);
RD_API double rd_trajectory_time(const rd_trajectory* traj, size_t step);
/* Element (row, col) of rho at `step`; basis index = level * fock_dim + photons. */
RD_API rd_status rd_trajectory_element(const rd_trajectory* traj, size_t step, int row, int col, double* re,
                                       double* im);
/* Steady state written row-major into dim*dim re/im buffers. */
RD_API rd_status rd_steady_state(const rd_generator* gen, double* re, double* im, size_t capacity);
RD_API rd_status rd_verify_displacement_identity(double alpha_re, double alpha_im, int k, int qubit_dim,
                                                 int fock_dim, double* deviation, double* effective_rate);

/* ---- output ------------------------------------------------------------ */
RD_API rd_status rd_plot_svg(const char* csv_path, const char* x_column, const char* const* y_columns,
                             size_t y_count, int log_y, const char* svg_path);

#ifdef __cplusplus
}
#endif

#endif /* RABIDISP_H */
