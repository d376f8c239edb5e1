/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rabidisp/rabidisp.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

#define EXPECT_OK(call) EXPECT((call) == RD_OK)

static const char* kConfig =
    "{\"omega_r_ghz\": 5.0, \"omega_10_ghz\": 6.0, \"anharmonicity_ghz\": 0.25, \"g0_ghz\": 0.1,"
    " \"num_qubit_levels\": 3, \"fock_truncation\": 4, \"temperature_ghz\": 0.3,"
    " \"bath_X\": {\"model\": \"ohmic\", \"eta\": 0.5},"
    " \"bath_R\": {\"model\": \"ohmic\", \"eta\": 0.5}}";

static void test_system(void) {
  rd_system* sys = NULL;
  rd_system* copy = NULL;
  double v = 0.0;
  int has = 0;
  size_t need = 0;
  char small[8];
  char* text;

  EXPECT(rd_system_from_json_string("{", &sys) == RD_ERR_CONFIG);
  EXPECT(strlen(rd_last_error()) > 0);
  EXPECT(rd_system_from_json_file("/nonexistent/x.json", &sys) == RD_ERR_IO);
  EXPECT(rd_system_from_json_string(NULL, &sys) == RD_ERR_INVALID_ARGUMENT);

  EXPECT_OK(rd_system_from_json_string(kConfig, &sys));
  EXPECT_OK(rd_system_get_param(sys, RD_PARAM_DETUNING, &v));
  EXPECT(fabs(v - 1.0) < 1e-15);
  EXPECT_OK(rd_system_set_param(sys, RD_PARAM_DETUNING, -1.5));
  EXPECT_OK(rd_system_get_param(sys, RD_PARAM_OMEGA_10, &v));
  EXPECT(fabs(v - 3.5) < 1e-15);
  EXPECT(rd_system_set_param(sys, RD_PARAM_G0, -1.0) == RD_ERR_INVALID_ARGUMENT);
  EXPECT(rd_system_set_param(sys, RD_PARAM_FOCK_TRUNCATION, 2.5) == RD_ERR_INVALID_ARGUMENT);

  EXPECT_OK(rd_system_has_bath(sys, RD_BATH_X, &has));
  EXPECT(has == 1);
  EXPECT_OK(rd_system_has_bath(sys, RD_BATH_Z, &has));
  EXPECT(has == 0);

  EXPECT_OK(rd_system_clone(sys, &copy));
  EXPECT_OK(rd_system_set_param(copy, RD_PARAM_DETUNING, 2.0));
  EXPECT_OK(rd_system_get_param(sys, RD_PARAM_DETUNING, &v));
  EXPECT(fabs(v + 1.5) < 1e-15);

  EXPECT_OK(rd_system_validate(sys));
  EXPECT(rd_system_warning_count(sys) == 0);
  EXPECT_OK(rd_system_set_param(copy, RD_PARAM_DETUNING, 0.3));
  EXPECT_OK(rd_system_validate(copy));
  EXPECT(rd_system_warning_count(copy) >= 1);
  EXPECT(rd_system_warning(copy, 0) != NULL);
  EXPECT(rd_system_warning(copy, 99) == NULL);

  EXPECT_OK(rd_system_to_json(sys, NULL, 0, &need));
  EXPECT(need > 10);
  EXPECT_OK(rd_system_to_json(sys, small, sizeof small, NULL));
  EXPECT(strlen(small) == sizeof small - 1);
  text = (char*)malloc(need);
  EXPECT_OK(rd_system_to_json(sys, text, need, NULL));
  {
    rd_system* again = NULL;
    EXPECT_OK(rd_system_from_json_string(text, &again));
    EXPECT_OK(rd_system_get_param(again, RD_PARAM_OMEGA_10, &v));
    EXPECT(v == 3.5);
    rd_system_free(again);
  }
  free(text);
  rd_system_free(copy);
  rd_system_free(sys);
  rd_system_free(NULL);
}

static void test_analytics(void) {
  rd_system* sys = NULL;
  rd_shifts s;
  rd_prefactors rabi, jc;
  double chi, xi, chit, photon, level, down, up, c;
  size_t count = 0, count2 = 0;
  rd_dissipator* list;

  EXPECT_OK(rd_system_from_json_string(kConfig, &sys));
  EXPECT_OK(rd_dispersive_shifts(sys, &s));
  EXPECT(fabs(s.chi0 - 0.01) < 1e-15);
  EXPECT(fabs(s.chi_tilde0 - (s.chi0 + s.xi0)) < 1e-15);
  EXPECT(s.pull_rabi == -s.chi_tilde0);
  EXPECT_OK(rd_level_shifts(sys, 1, &chi, &xi, &chit));
  EXPECT(fabs(chi - 0.02 / 0.75) < 1e-14);
  EXPECT_OK(rd_h2_coefficients(sys, RD_MODEL_RABI, 0, &photon, &level));
  EXPECT(fabs(photon - s.pull_rabi) < 1e-15);
  EXPECT(rd_h2_coefficients(sys, RD_MODEL_RABI, 7, &photon, &level) == RD_ERR_INVALID_ARGUMENT);

  EXPECT_OK(rd_prefactors_get(sys, 0, RD_MODEL_RABI, &rabi));
  EXPECT_OK(rd_prefactors_get(sys, 0, RD_MODEL_JC, &jc));
  EXPECT(jc.c == 0.0);
  EXPECT(rabi.d == jc.d);
  EXPECT(fabs(rabi.p / jc.p - 100.0 / 121.0) < 1e-14);

  EXPECT_OK(rd_purcell_rates(sys, 0, RD_MODEL_JC, &down, &up));
  EXPECT(down > up && up > 0.0);
  EXPECT_OK(rd_spectral_evaluate(sys, RD_BATH_R, 6.0, &c));
  EXPECT(fabs(down - jc.p * c) < 1e-15 * down);

  EXPECT_OK(rd_rates_list(sys, RD_MODEL_RABI, 0.0, NULL, 0, &count));
  EXPECT_OK(rd_rates_list(sys, RD_MODEL_RABI, 2.0, NULL, 0, &count2));
  EXPECT(count2 == count + 2 * 2 + 3);
  list = (rd_dissipator*)calloc(count2, sizeof *list);
  EXPECT(rd_rates_list(sys, RD_MODEL_RABI, 2.0, list, 3, &count2) == RD_ERR_INVALID_ARGUMENT);
  EXPECT_OK(rd_rates_list(sys, RD_MODEL_RABI, 2.0, list, count2, &count2));
  EXPECT(list[0].qubit_op == RD_QOP_LOWER && list[0].origin == RD_ORIGIN_SECOND_ORDER);
  EXPECT(list[count2 - 1].origin == RD_ORIGIN_DRIVEN_EFFECTIVE);
  EXPECT(rd_rates_list(sys, RD_MODEL_RABI, -1.0, NULL, 0, &count) == RD_ERR_NEGATIVE_PHOTON_NUMBER);
  free(list);

  EXPECT_OK(rd_system_set_param(sys, RD_PARAM_DETUNING, 0.0));
  EXPECT(rd_dispersive_shifts(sys, &s) == RD_ERR_RESONANT_DIVERGENCE);
  EXPECT(strstr(rd_last_error(), "chi") != NULL);
  rd_system_free(sys);
}

static void test_exact_and_fit(void) {
  rd_system* sys = NULL;
  double pull, qshift, model;
  double d[40], y[40], res[40];
  rd_fit_result fit;
  int i, n = 0;
  FILE* f;

  EXPECT_OK(rd_system_from_json_string(kConfig, &sys));
  EXPECT_OK(rd_exact_shifts(sys, RD_MODEL_RABI, &pull, &qshift));
  EXPECT(pull < 0.0 && fabs(pull + 0.0109) < 1e-3);
  EXPECT_OK(rd_write_hamiltonian_csv(sys, RD_MODEL_JC, "capi_h.csv"));
  f = fopen("capi_h.csv", "r");
  EXPECT(f != NULL);
  if (f) {
    char line[64];
    EXPECT(fgets(line, sizeof line, f) != NULL);
    EXPECT(strcmp(line, "# 12,12\n") == 0);
    fclose(f);
  }
  EXPECT(rd_write_hamiltonian_csv(sys, RD_MODEL_JC, "/nonexistent/dir/h.csv") == RD_ERR_IO);
  EXPECT_OK(rd_system_set_param(sys, RD_PARAM_FOCK_TRUNCATION, 2000));
  EXPECT(rd_exact_shifts(sys, RD_MODEL_RABI, &pull, &qshift) == RD_ERR_DIMENSION_OVERFLOW);
  rd_system_free(sys);

  for (i = 0; i < 40; ++i) {
    const double delta = -3.0 + 6.0 * i / 39.0;
    if (fabs(delta) < 0.3) continue;
    EXPECT_OK(rd_model_shift(delta, 0.08, RD_MODEL_JC, RD_OBS_QUBIT, 5.0, 0.25, 3, &model));
    d[n] = delta;
    y[n] = model;
    ++n;
  }
  EXPECT_OK(rd_fit_g0(d, y, (size_t)n, RD_MODEL_JC, RD_OBS_QUBIT, 5.0, 0.25, 3, &fit, res));
  EXPECT(fabs(fit.g0 - 0.08) < 1e-8);
  EXPECT(fabs(res[0]) < 1e-12);
  EXPECT(rd_fit_g0(d, y, 2, RD_MODEL_JC, RD_OBS_QUBIT, 5.0, 0.25, 3, &fit, NULL) == RD_ERR_INVALID_ARGUMENT);
}

static void test_dynamics(void) {
  rd_system* sys = NULL;
  rd_generator* gen = NULL;
  rd_trajectory* traj = NULL;
  rd_initial_state init = {RD_INIT_FOCK, 1, 0, 0.0};
  double re, im, trace = 0.0, *bre, *bim, dev, rate;
  int d, i;

  EXPECT_OK(rd_system_from_json_string(kConfig, &sys));
  EXPECT_OK(rd_generator_assemble(sys, RD_MODEL_RABI, RD_MODE_DRESSED_ANALYTIC, 0.0, &gen));
  d = rd_generator_dim(gen);
  EXPECT(d == 12);
  EXPECT_OK(rd_evolve(gen, &init, 10.0, 1.0, 1e-9, &traj));
  EXPECT(rd_trajectory_size(traj) == 11);
  EXPECT(rd_trajectory_time(traj, 10) == 10.0);
  EXPECT(isnan(rd_trajectory_time(traj, 11)));
  for (i = 0; i < d; ++i) {
    EXPECT_OK(rd_trajectory_element(traj, 10, i, i, &re, &im));
    trace += re;
  }
  EXPECT(fabs(trace - 1.0) < 1e-9);
  EXPECT(rd_trajectory_element(traj, 10, d, 0, &re, &im) == RD_ERR_INVALID_ARGUMENT);
  rd_trajectory_free(traj);

  init.level = 5;
  EXPECT(rd_evolve(gen, &init, 1.0, 1.0, 1e-9, &traj) == RD_ERR_DIMENSION_MISMATCH);

  bre = (double*)calloc((size_t)(d * d), sizeof(double));
  bim = (double*)calloc((size_t)(d * d), sizeof(double));
  EXPECT(rd_steady_state(gen, bre, bim, 3) == RD_ERR_INVALID_ARGUMENT);
  EXPECT_OK(rd_steady_state(gen, bre, bim, (size_t)(d * d)));
  trace = 0.0;
  for (i = 0; i < d; ++i) trace += bre[i * d + i];
  EXPECT(fabs(trace - 1.0) < 1e-10);
  free(bre);
  free(bim);
  rd_generator_free(gen);

  EXPECT_OK(rd_verify_displacement_identity(1.0, 0.0, 0, 2, 16, &dev, &rate));
  EXPECT(dev < 1e-6);
  EXPECT(fabs(rate - 1.0) < 1e-6);
  EXPECT(rd_verify_displacement_identity(5.0, 0.0, 0, 2, 16, &dev, &rate) == RD_ERR_TRUNCATION_TOO_SMALL);
  rd_system_free(sys);
}

static void test_plot(void) {
  const char* cols[] = {"y"};
  FILE* f = fopen("capi_plot.csv", "w");
  if (!f) {
    ++failures;
    return;
  }
  fputs("x,y\n0,1\n1,2\n2,4\n", f);
  fclose(f);
  EXPECT_OK(rd_plot_svg("capi_plot.csv", "x", cols, 1, 1, "capi_plot.svg"));
  EXPECT(rd_plot_svg("missing.csv", "x", cols, 1, 0, "out.svg") == RD_ERR_IO);
  EXPECT(rd_plot_svg("capi_plot.csv", "nope", cols, 1, 0, "out.svg") == RD_ERR_INVALID_ARGUMENT);
}

int main(void) {
  EXPECT(strcmp(rd_version(), "1.0.0") == 0);
  EXPECT(strcmp(rd_status_name(RD_ERR_NO_BRACKET), "NoBracket") == 0);
  test_system();
  test_analytics();
  test_exact_and_fit();
  test_dynamics();
  test_plot();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
