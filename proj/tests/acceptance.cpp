// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero only when
// a criterion cannot be evaluated at all, or with --strict when any fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rabidisp/dispersive.hpp"
#include "rabidisp/error.hpp"
#include "rabidisp/exact.hpp"
#include "rabidisp/fit.hpp"
#include "rabidisp/lindblad.hpp"
#include "rabidisp/rates.hpp"

using namespace rabidisp;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// Detuning grid: 161 points on [-3, 3] GHz minus the |delta| < 3 g0 window.
std::vector<double> figure_grid(double g0) {
  std::vector<double> out;
  for (int i = 0; i < 161; ++i) {
    const double d = i == 160 ? 3.0 : -3.0 + 6.0 * i / 160.0;
    if (std::abs(d) >= 3.0 * g0 * (1.0 - 1e-9)) out.push_back(d);
  }
  return out;
}

TransmonSpec figure_transmon(double delta) {
  return {5.0 + delta, 0.25, 0.1, 10, {}, {}};
}

// ---- 1 --------------------------------------------------------------------

Outcome closed_form_identities() {
  const auto start = Clock::now();
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> w10(2.0, 9.0), anh(0.05, 0.4), g(0.005, 0.3), wr(3.0, 8.0);
  double worst = 0.0;
  int sets = 0;
  while (sets < 1000) {
    const TransmonSpec t{w10(rng), anh(rng), g(rng), 3, {}, {}};
    const QubitSpec q = expand_transmon(t);
    const double r = wr(rng);
    if (std::abs(q.splitting(0) - r) < 0.05 || std::abs(q.splitting(1) - r) < 0.05) continue;
    ++sets;
    const double w = q.splitting(0);
    auto track = [&](double a, double b) { worst = std::max(worst, oracle::rel(a, b)); };
    for (int k = 0; k < 2; ++k) {
      track(chi_tilde(q, r, k), chi(q, r, k) + xi(q, r, k));
      const double wk = q.splitting(k);
      track(purcell_prefactor(q, r, k, Interaction::Rabi) / purcell_prefactor(q, r, k, Interaction::JaynesCummings),
            4.0 * r * r / ((r + wk) * (r + wk)));
      const auto [d_rabi, c_rabi] = dressed_dephasing_prefactors(q, r, k, Interaction::Rabi);
      const auto [d_jc, c_jc] = dressed_dephasing_prefactors(q, r, k, Interaction::JaynesCummings);
      track(d_jc, d_rabi);
      if (c_jc != 0.0) worst = std::max(worst, 1.0);
      (void)c_rabi;
    }
    track(chi_tilde(q, r, 0), 2.0 * chi(q, r, 0) * w / (w + r));
    track(photon_assisted_dephasing_prefactor(q, r, 0, Interaction::Rabi) /
              photon_assisted_dephasing_prefactor(q, r, 0, Interaction::JaynesCummings),
          4.0 * w * w / ((r + w) * (r + w)));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && elapsed < 1.0,
          format("max rel deviation %.2e over %d random sets in %.3f s", worst, sets, elapsed)};
}

// ---- 2 and 3 --------------------------------------------------------------

Outcome figure_reproduction(Observable obs) {
  const auto start = Clock::now();
  int evaluated = 0, ordered = 0, undefined = 0;
  double worst_far = 0.0;
  for (double delta : figure_grid(0.1)) {
    double exact = 0.0;
    QubitSpec q;
    try {
      q = expand_transmon(figure_transmon(delta));
      const ExactShifts x = exact_shifts(q, {5.0, 10}, Interaction::Rabi);
      exact = obs == Observable::Resonator ? x.resonator_pull : x.qubit_shift;
    } catch (const Error&) {
      ++undefined;
      continue;
    }
    ++evaluated;
    const double rabi =
        obs == Observable::Resonator ? resonator_pull(q, 5.0, Interaction::Rabi) : qubit_shift(q, 5.0, Interaction::Rabi);
    const double jc = obs == Observable::Resonator ? resonator_pull(q, 5.0, Interaction::JaynesCummings)
                                                   : qubit_shift(q, 5.0, Interaction::JaynesCummings);
    const double err_rabi = std::abs((rabi - exact) / exact);
    const double err_jc = std::abs((jc - exact) / exact);
    if (err_rabi <= err_jc) ++ordered;
    if (std::abs(delta) >= 2.0 - 1e-12) worst_far = std::max(worst_far, err_rabi);
  }
  const int total = evaluated + undefined;
  // undefined points count against the ordering fraction
  const double fraction = static_cast<double>(ordered) / total;
  const double elapsed = seconds_since(start);
  const bool pass = fraction >= 0.9 && worst_far < 0.01 && elapsed < 30.0;
  return {pass, format("Rabi error <= JC error at %d/%d points (%.1f%%), max Rabi error %.3f%% at |delta0| >= 2 GHz, "
                       "%d point(s) without a valid N=10 ladder, %.2f s",
                       ordered, total, 100.0 * fraction, 100.0 * worst_far, undefined, elapsed)};
}

// ---- 4 --------------------------------------------------------------------

Outcome g0_fits() {
  const auto start = Clock::now();
  std::vector<FitPoint> pull_data, qubit_data;
  for (double delta : figure_grid(0.1)) {
    try {
      const ExactShifts x = exact_shifts(expand_transmon(figure_transmon(delta)), {5.0, 10}, Interaction::Rabi);
      pull_data.push_back({delta, x.resonator_pull});
      qubit_data.push_back({delta, x.qubit_shift});
    } catch (const Error&) {
    }
  }
  const FitFixed fixed{5.0, 0.25, 10};
  bool pass = true;
  std::ostringstream detail;
  for (auto obs : {Observable::Resonator, Observable::Qubit}) {
    const auto& data = obs == Observable::Resonator ? pull_data : qubit_data;
    const FitResult rabi = fit_g0(data, Interaction::Rabi, obs, fixed);
    const FitResult jc = fit_g0(data, Interaction::JaynesCummings, obs, fixed);
    for (const auto* r : {&rabi, &jc}) {
      const double mhz = 1e3 * r->g0;
      pass = pass && mhz >= 91.0 && mhz <= 98.0;
    }
    pass = pass && rabi.residual_sum <= jc.residual_sum;
    detail << (obs == Observable::Resonator ? "resonator" : "qubit") << ": Rabi "
           << format("%.2f +- %.2f", 1e3 * rabi.g0, 1e3 * rabi.stderr_g0) << " MHz, JC "
           << format("%.2f +- %.2f", 1e3 * jc.g0, 1e3 * jc.stderr_g0) << " MHz, SSE Rabi/JC "
           << format("%.2e/%.2e", rabi.residual_sum, jc.residual_sum) << "; ";
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 120.0;
  detail << format("%zu points, target [91, 98] MHz, %.2f s", pull_data.size(), elapsed);
  return {pass, detail.str()};
}

// ---- 5 --------------------------------------------------------------------

Outcome two_level_consistency() {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> w10(2.0, 9.0), g(0.005, 0.3), wr(3.0, 8.0), eta(0.01, 1.0), temp(0.05, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double w = w10(rng), r = wr(rng), g0 = g(rng), t = temp(rng);
    if (std::abs(w - r) < 0.05) continue;
    TransmonSpec ts{w, 0.0, g0, 2, std::vector<double>{1.0}, std::vector<double>{1.0, -1.0}};
    SystemSpec s;
    s.qubit = expand_transmon(ts);
    s.resonator = {r, 4};
    s.baths = {SpectralFunction(Ohmic{eta(rng), 1e3}, t), SpectralFunction(Ohmic{eta(rng), 1e3}, t),
               SpectralFunction(Ohmic{eta(rng), 1e3}, t)};
    const auto& cx = s.bath(Bath::X);
    const auto& cz = s.bath(Bath::Z);
    const auto& cr = s.bath(Bath::R);
    auto track = [&](double a, double b) { worst = std::max(worst, oracle::rel(a, b)); };

    // Shifts, written in sigma_z form: the transition and photon coefficients.
    const double chit0 = 2.0 * g0 * g0 * w / (w * w - r * r);
    const double chi0 = g0 * g0 / (w - r);
    const auto h2r = h2_coefficients(s.qubit, r, Interaction::Rabi);
    const auto h2j = h2_coefficients(s.qubit, r, Interaction::JaynesCummings);
    track(h2r[0].photon, -chit0);
    track(h2r[1].photon, chit0);
    track(h2r[1].level - h2r[0].level, chit0);
    track(h2j[0].photon, -chi0);
    track(h2j[1].photon, chi0);
    track(h2j[1].level - h2j[0].level, chi0);
    track(chit0, 2.0 * chi0 * w / (w + r));

    // Rates.
    const RateTable rt = rate_table(s, Interaction::Rabi);
    const auto& so = rt.second_order;
    track(so[0].rate, cx.evaluate(w));
    track(so[1].rate, cx.evaluate(-w));
    track(so[2].rate, cz.evaluate(0.0));
    track(so[3].rate, cz.evaluate(0.0));
    track(so[4].rate, cr.evaluate(r));
    track(so[5].rate, cr.evaluate(-r));
    const double pref_p = 8.0 * g0 * g0 * r * r / std::pow(w * w - r * r, 2);
    track(rt.fourth_order_rate({QubitOp::Lower, 0, PhotonOp::None}, RateOrigin::Purcell), pref_p * cr.evaluate(w));
    track(rt.fourth_order_rate({QubitOp::Raise, 0, PhotonOp::None}, RateOrigin::Purcell), pref_p * cr.evaluate(-w));
    const double pref_d = 8.0 * g0 * g0 / std::pow(w - r, 2);
    const double pref_c = 8.0 * g0 * g0 / std::pow(w + r, 2);
    const auto dd = RateOrigin::DressedDephasing;
    track(rt.fourth_order_rate({QubitOp::Lower, 0, PhotonOp::Create}, dd), pref_d * cz.evaluate(w - r));
    track(rt.fourth_order_rate({QubitOp::Raise, 0, PhotonOp::Annihilate}, dd), pref_d * cz.evaluate(r - w));
    track(rt.fourth_order_rate({QubitOp::Lower, 0, PhotonOp::Annihilate}, dd), pref_c * cz.evaluate(w + r));
    track(rt.fourth_order_rate({QubitOp::Raise, 0, PhotonOp::Create}, dd), pref_c * cz.evaluate(-w - r));
    const double pref_a = 8.0 * g0 * g0 * w * w / std::pow(w * w - r * r, 2);
    const auto pad = RateOrigin::PhotonAssistedDephasing;
    for (int k = 0; k < 2; ++k) {
      track(rt.fourth_order_rate({QubitOp::Project, k, PhotonOp::Annihilate}, pad), pref_a * cx.evaluate(r));
      track(rt.fourth_order_rate({QubitOp::Project, k, PhotonOp::Create}, pad), pref_a * cx.evaluate(-r));
    }
  }
  return {worst <= 1e-12, format("max rel deviation %.2e over shifts and all rates", worst)};
}

// ---- 6 --------------------------------------------------------------------

SystemSpec me_spec(double delta, double g0, SpectralFunction x, SpectralFunction z, SpectralFunction r) {
  SystemSpec s;
  s.qubit = expand_transmon({5.0 + delta, 0.25, g0, 3, {}, {}});
  s.resonator = {5.0, 5};
  s.baths = {x, z, r};
  return s;
}

double population(const CMatrix& rho, const ProductSpace& sp, int k, int n) {
  return rho(sp.index(k, n), sp.index(k, n)).real();
}

// Dominant positive frequency of <a>(t), refined past the DFT bin width.
double dominant_frequency(const std::vector<double>& t, const std::vector<Complex>& x, double lo, double hi) {
  auto power = [&](double f) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) s += x[i] * std::exp(Complex(0.0, kTwoPi * f * t[i]));
    return -std::abs(s);
  };
  const double span = t.back() - t.front();
  const double bin = 1.0 / span;
  double best = lo, best_val = power(lo);
  for (double f = lo; f <= hi; f += 0.1 * bin) {
    const double v = power(f);
    if (v < best_val) {
      best_val = v;
      best = f;
    }
  }
  return golden_section_minimize(power, best - 0.2 * bin, best + 0.2 * bin, 1e-12).x;
}

Outcome master_equation_suite() {
  const auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;

  // Trace drift with every channel active.
  {
    const double t = 0.3;
    const SystemSpec s = me_spec(1.0, 0.1, SpectralFunction(Ohmic{2.0, 1e3}, t), SpectralFunction(Flat{1.0}, t),
                                 SpectralFunction(Ohmic{2.0, 1e3}, t));
    const RateTable table = rate_table(s, Interaction::Rabi);
    const LindbladGenerator gen =
        assemble(s, table, GeneratorMode::DressedAnalytic, driven_effective_rates(table, 0.5));
    const double kappa = kTwoPi * 1e-3 * s.bath(Bath::R).evaluate(5.0);
    const Trajectory tr = evolve(gen, fock_state(gen.space(), 1, 2), {10.0 / kappa, 1.0, 1e-10});
    double drift = 0.0;
    for (const auto& rho : tr.states) drift = std::max(drift, std::abs(rho.trace() - 1.0));
    pass = pass && drift <= 1e-9;
    detail << format("trace drift %.1e; ", drift);
  }

  // Damped cavity from |0,2>.
  {
    const double kappa_mhz = 10.0;
    const SystemSpec s = me_spec(1.0, 0.1, {}, {}, SpectralFunction(Flat{kappa_mhz}, 0.0));
    const LindbladGenerator gen = assemble(s, rate_table(s, Interaction::Rabi), GeneratorMode::DressedAnalytic);
    const double k = kTwoPi * 1e-3 * kappa_mhz;
    const Trajectory tr = evolve(gen, fock_state(gen.space(), 0, 2), {10.0 / k, 1.0, 1e-10});
    double err = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      const double e = std::exp(-k * tr.times[i]);
      err = std::max(err, std::abs(population(tr.states[i], gen.space(), 0, 2) - e * e));
      err = std::max(err, std::abs(population(tr.states[i], gen.space(), 0, 1) - 2.0 * e * (1.0 - e)));
    }
    pass = pass && err <= 1e-6;
    detail << format("cavity %.1e; ", err);
  }

  // Damped qubit cascade |2> -> |1> -> |0>.
  {
    const double level = 5.0;
    const SystemSpec s = me_spec(1.0, 0.0, SpectralFunction(Flat{level}, 0.0), {}, {});
    const LindbladGenerator gen = assemble(s, rate_table(s, Interaction::Rabi), GeneratorMode::BarePlusInteraction);
    const double g1 = kTwoPi * 1e-3 * level, g2 = 2.0 * g1;
    const Trajectory tr = evolve(gen, fock_state(gen.space(), 2, 0), {10.0 / g1, 1.0, 1e-10});
    double err = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      const double t = tr.times[i];
      err = std::max(err, std::abs(population(tr.states[i], gen.space(), 2, 0) - std::exp(-g2 * t)));
      err = std::max(err, std::abs(population(tr.states[i], gen.space(), 1, 0) -
                                   g2 / (g2 - g1) * (std::exp(-g1 * t) - std::exp(-g2 * t))));
    }
    pass = pass && err <= 1e-6;
    detail << format("qubit %.1e; ", err);
  }

  // Thermal photon number.
  {
    const SpectralFunction r(Ohmic{0.05, 1e3}, 1.0);
    const SystemSpec s = me_spec(1.0, 0.1, {}, {}, r);
    const LindbladGenerator gen = assemble(s, rate_table(s, Interaction::Rabi), GeneratorMode::DressedAnalytic);
    const CMatrix rho = steady_state(gen);
    double nbar = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 5; ++n) nbar += n * population(rho, gen.space(), k, n);
    const double kp = r.evaluate(-5.0), km = r.evaluate(5.0);
    const double err = std::abs(nbar - kp / (km - kp));
    pass = pass && err <= 1e-8;
    detail << format("n_bar %.1e; ", err);
  }

  // Resonator frequency seen by bare H0 + H_int dynamics.
  {
    double worst_analytic = 0.0, worst_exact = 0.0;
    for (double delta : {-2.0, -1.0, 1.0, 2.0}) {
      const SystemSpec s = me_spec(delta, 0.1, {}, {}, {});
      const LindbladGenerator gen = assemble(s, rate_table(s, Interaction::Rabi), GeneratorMode::BarePlusInteraction);
      const ProductSpace& sp = gen.space();
      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(sp.dim());
      psi(sp.index(0, 0)) = psi(sp.index(0, 1)) = 1.0 / std::sqrt(2.0);
      const Trajectory tr = evolve(gen, psi * psi.adjoint(), {20.0, 0.02, 1e-10});
      std::vector<Complex> a_t;
      for (const auto& rho : tr.states) {
        Complex v = 0.0;
        for (int k = 0; k < sp.qubit_dim; ++k)
          for (int n = 1; n < sp.fock_dim; ++n) v += std::sqrt(double(n)) * rho(sp.index(k, n), sp.index(k, n - 1));
        a_t.push_back(v);
      }
      const double f = dominant_frequency(tr.times, a_t, 4.5, 5.5);
      const double analytic = 5.0 - chi_tilde(s.qubit, 5.0, 0);
      const double exact = 5.0 + exact_shifts(s.qubit, s.resonator, Interaction::Rabi).resonator_pull;
      worst_analytic = std::max(worst_analytic, std::abs(f - analytic) / analytic);
      worst_exact = std::max(worst_exact, std::abs(f - exact) / exact);
    }
    pass = pass && worst_analytic <= 0.02;
    detail << format("frequency vs w_r - chi~0 %.1e (vs exact %.1e); ", worst_analytic, worst_exact);
  }

  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 120.0;
  detail << format("%.2f s", elapsed);
  return {pass, detail.str()};
}

// ---- 7 --------------------------------------------------------------------

Outcome displacement() {
  const ProductSpace sp{3, 16};
  const DisplacementCheck one = verify_displacement_identity({1.0, 0.0}, 0, sp);
  const DisplacementCheck two = verify_displacement_identity({2.0, 0.0}, 0, sp);

  SystemSpec s;
  s.qubit = expand_transmon({6.0, 0.25, 0.1, 3, {}, {}});
  s.resonator = {5.0, 16};
  s.baths = {SpectralFunction(Ohmic{0.3, 1e3}, 0.2), SpectralFunction(Ohmic{0.3, 1e3}, 0.2),
             SpectralFunction(Ohmic{0.3, 1e3}, 0.2)};
  const RateTable table = rate_table(s, Interaction::Rabi);
  const auto r1 = driven_effective_rates(table, 1.0);
  const auto r4 = driven_effective_rates(table, 4.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < r1.size(); ++i) worst = std::max(worst, oracle::rel(r4[i].rate, 4.0 * r1[i].rate));
  const double ratio = two.effective_rate / one.effective_rate;
  const bool pass = one.deviation <= 1e-6 && worst == 0.0 && std::abs(ratio - 4.0) <= 1e-6;
  return {pass, format("deviation %.1e at |alpha|^2 = 1, M = 16; driven rates n=4 vs n=1 max rel %.1e; "
                       "displaced remainder ratio %.9f",
                       one.deviation, worst, ratio)};
}

// ---- 8 --------------------------------------------------------------------

Outcome spectral_suite() {
  double worst = 0.0;
  int checks = 0;
  const SpectralModel models[] = {Ohmic{0.7, 50.0}, Ohmic{0.01, 1e3}, OneOverF{1e-3, 1e-3}, Flat{2.0}};
  for (const auto& m : models) {
    for (double t : {0.01, 0.1, 0.5, 2.0, 10.0}) {
      const SpectralFunction sf(m, t);
      for (double w : {1e-3, 0.05, 0.7, 5.0, 12.0, 40.0}) {
        const double plus = sf.evaluate(w), minus = sf.evaluate(-w);
        double dev;
        if (minus > 0.0 && std::isfinite(plus / minus) && w / t < 700.0) {
          dev = oracle::rel(plus / minus, std::exp(w / t));
        } else {
          // ratio not representable; compare in log form
          dev = std::abs(sf.log_evaluate(w) - sf.log_evaluate(-w) - w / t) / (w / t);
        }
        worst = std::max(worst, dev);
        ++checks;
      }
    }
  }
  double dc_worst = 0.0;
  for (double eta : {0.01, 0.3, 2.0})
    for (double t : {0.01, 0.2, 3.0})
      dc_worst = std::max(dc_worst, oracle::rel(SpectralFunction(Ohmic{eta, 1e3}, t).evaluate(0.0), eta * t));
  return {worst <= 1e-12 && dc_worst <= 1e-9,
          format("detailed balance max rel %.1e over %d points; Ohmic C(0) max rel %.1e", worst, checks, dc_worst)};
}

// ---- 9 --------------------------------------------------------------------

Outcome determinism(const std::string& cli, const std::string& config) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rabidisp_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> contents;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("run" + std::to_string(run) + ".csv");
    const std::string cmd = cli + " shifts --config " + config + " --out " + out.string() + " 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "CLI run failed: " + cmd};
    std::ifstream in(out, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    contents.push_back(s.str());
  }
  const bool same = contents[0] == contents[1] && !contents[0].empty();
  return {same, format("two shifts runs, %zu bytes each, %s", contents[0].size(), same ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) strict = strict || std::strcmp(argv[i], "--strict") == 0;

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed-form identities", closed_form_identities},
      {2, "resonator-pull sweep", [] { return figure_reproduction(Observable::Resonator); }},
      {3, "qubit-shift sweep", [] { return figure_reproduction(Observable::Qubit); }},
      {4, "g0 fits to exact data", g0_fits},
      {5, "two-level consistency", two_level_consistency},
      {6, "master-equation physics", master_equation_suite},
      {7, "displacement identity", displacement},
      {8, "spectral functions", spectral_suite},
      {9, "CLI determinism", [] { return determinism(RABIDISP_CLI_PATH, RABIDISP_CONFIG_DIR "/fig1.json"); }},
  };

  int failed = 0, broken = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("could not be evaluated: ") + e.what()};
      ++broken;
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %d %s: %s (%s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  if (broken) return 2;
  return strict && failed ? 1 : 0;
}
