// rabidisp command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rabidisp/rabidisp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitMath = 3;
constexpr int kExitIo = 4;

struct CliError {
  int exit_code;
  std::string message;
};

std::string fmt(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0;  // no negative zero in output
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(rd_status s) {
  switch (s) {
    case RD_OK: return kExitOk;
    case RD_ERR_CONFIG:
    case RD_ERR_INVALID_ARGUMENT: return kExitConfig;
    case RD_ERR_IO: return kExitIo;
    default: return kExitMath;
  }
}

void check(rd_status s, const std::string& what) {
  if (s != RD_OK) throw CliError{exit_code_for(s), what + ": " + rd_last_error()};
}

using SystemPtr = std::unique_ptr<rd_system, decltype(&rd_system_free)>;

SystemPtr make_system(rd_system* raw) { return SystemPtr(raw, &rd_system_free); }

struct Common {
  std::string config;
  std::string model = "rabi";
  std::string out;
  int nq = 0;
  int nr = 0;
  double photons = 0.0;
};

rd_model parse_model(const std::string& s) { return s == "jc" ? RD_MODEL_JC : RD_MODEL_RABI; }

SystemPtr load_system(const Common& c) {
  if (c.config.empty()) throw CliError{kExitConfig, "--config is required"};
  rd_system* raw = nullptr;
  const rd_status s = rd_system_from_json_file(c.config.c_str(), &raw);
  if (s == RD_ERR_IO) throw CliError{kExitIo, rd_last_error()};
  if (s != RD_OK) throw CliError{kExitConfig, rd_last_error()};
  SystemPtr sys = make_system(raw);
  if (c.nq > 0) check(rd_system_set_param(sys.get(), RD_PARAM_NUM_QUBIT_LEVELS, c.nq), "--nq");
  if (c.nr > 0) check(rd_system_set_param(sys.get(), RD_PARAM_FOCK_TRUNCATION, c.nr), "--nr");
  check(rd_system_set_model(sys.get(), parse_model(c.model)), "--model");
  return sys;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw CliError{kExitIo, "cannot open " + path + " for writing"};
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream()) throw CliError{kExitIo, "write failed: " + (path_.empty() ? std::string("stdout") : path_)};
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

// ---- sweeps ---------------------------------------------------------------

struct Sweep {
  std::string variable = "detuning";
  rd_param param = RD_PARAM_DETUNING;
  double start = -3.0;
  double stop = 3.0;
  int count = 161;

  double at(int i) const {
    if (i == count - 1) return stop;
    return start + (stop - start) * i / (count - 1);
  }
  std::string column() const {
    if (variable == "coupling") return "g0_ghz";
    if (variable == "temperature") return "temperature_ghz";
    return "delta0_ghz";
  }
};

Sweep parse_sweep(const std::string& text) {
  Sweep s;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4) throw CliError{kExitConfig, "--sweep expects VAR:START:STOP:COUNT"};
  s.variable = parts[0];
  if (s.variable == "detuning") s.param = RD_PARAM_DETUNING;
  else if (s.variable == "coupling") s.param = RD_PARAM_G0;
  else if (s.variable == "temperature") s.param = RD_PARAM_TEMPERATURE;
  else throw CliError{kExitConfig, "unknown sweep variable '" + s.variable + "'"};
  try {
    s.start = std::stod(parts[1]);
    s.stop = std::stod(parts[2]);
    s.count = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw CliError{kExitConfig, "malformed --sweep '" + text + "'"};
  }
  if (s.count < 2) throw CliError{kExitConfig, "--sweep COUNT must be at least 2"};
  return s;
}

struct Row {
  std::vector<std::string> cells;
  bool failed = false;
};

// Evaluates `point(sys, value)` for every sweep value on a pool of threads.
// Each point works on its own clone; rows come back in sweep order.
template <class F>
std::vector<Row> run_sweep(const rd_system* base, const Sweep& sweep, bool keep_resonant, F point) {
  std::vector<std::optional<Row>> slots(static_cast<std::size_t>(sweep.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < sweep.count; i = next++) {
      rd_system* raw = nullptr;
      if (rd_system_clone(base, &raw) != RD_OK) {
        slots[static_cast<std::size_t>(i)] = Row{{}, true};
        continue;
      }
      SystemPtr sys = make_system(raw);
      const double value = sweep.at(i);
      Row row;
      const rd_status s = rd_system_set_param(sys.get(), sweep.param, value);
      if (s != RD_OK) {
        row.failed = true;
        row.cells = {fmt(value)};
        slots[static_cast<std::size_t>(i)] = row;
        continue;
      }
      double delta = 0.0, g0 = 0.0;
      rd_system_get_param(sys.get(), RD_PARAM_DETUNING, &delta);
      rd_system_get_param(sys.get(), RD_PARAM_G0, &g0);
      // Boundary points of the window are kept; the tolerance absorbs grid rounding.
      if (!keep_resonant && std::abs(delta) < 3.0 * g0 * (1.0 - 1e-9)) continue;
      row = point(sys.get(), value);
      slots[static_cast<std::size_t>(i)] = std::move(row);
    }
  };
  const unsigned n_threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<Row> rows;
  for (auto& s : slots)
    if (s) rows.push_back(std::move(*s));
  return rows;
}

int emit_rows(Output& out, const std::vector<std::string>& header, const std::vector<Row>& rows) {
  write_row(out.stream(), header);
  std::size_t failures = 0;
  for (const auto& r : rows) {
    std::vector<std::string> cells = r.cells;
    if (cells.size() < header.size()) {
      // a point that failed before evaluation still carries its token
      cells.resize(header.size() - 1, "nan");
      cells.emplace_back(r.failed ? "InvalidArgument" : "");
    }
    write_row(out.stream(), cells);
    failures += r.failed ? 1 : 0;
  }
  out.finish();
  if (!rows.empty() && failures == rows.size()) {
    std::cerr << "error: every row failed\n";
    return kExitMath;
  }
  if (failures > 0) std::cerr << "warning: " << failures << " of " << rows.size() << " rows flagged\n";
  return kExitOk;
}

// Appends the status token for the first failure of a row.
struct RowErrors {
  std::string token;
  void note(rd_status s) {
    if (s != RD_OK && token.empty()) token = rd_status_name(s);
  }
};

// ---- shifts ---------------------------------------------------------------

struct ShiftsArgs {
  Common common;
  std::string sweep = "detuning:-3:3:161";
  bool keep_resonant = false;
  bool no_exact = false;
};

int cmd_shifts(const ShiftsArgs& a) {
  SystemPtr base = load_system(a.common);
  const Sweep sweep = parse_sweep(a.sweep);
  const rd_model exact_model = parse_model(a.common.model);
  std::vector<std::string> header;
  if (sweep.param != RD_PARAM_DETUNING) header.push_back(sweep.column());
  for (const char* c : {"delta0_ghz", "chi0", "xi0", "chi_tilde0", "pull_rabi", "pull_jc", "qshift_rabi", "qshift_jc",
                        "exact_pull", "exact_qshift", "err_frac_rabi", "err_frac_jc", "qerr_frac_rabi",
                        "qerr_frac_jc", "error"})
    header.emplace_back(c);

  const bool extra_col = sweep.param != RD_PARAM_DETUNING;
  const auto rows = run_sweep(base.get(), sweep, a.keep_resonant, [&](rd_system* sys, double value) {
    Row row;
    RowErrors err;
    double delta = 0.0;
    rd_system_get_param(sys, RD_PARAM_DETUNING, &delta);
    if (extra_col) row.cells.push_back(fmt(value));
    row.cells.push_back(fmt(delta));
    rd_shifts s{NAN, NAN, NAN, NAN, NAN, NAN, NAN};
    err.note(rd_dispersive_shifts(sys, &s));
    double pull = NAN, qshift = NAN;
    if (!a.no_exact) err.note(rd_exact_shifts(sys, exact_model, &pull, &qshift));
    for (double v : {s.chi0, s.xi0, s.chi_tilde0, s.pull_rabi, s.pull_jc, s.qshift_rabi, s.qshift_jc, pull, qshift,
                     (s.pull_rabi - pull) / pull, (s.pull_jc - pull) / pull, (s.qshift_rabi - qshift) / qshift,
                     (s.qshift_jc - qshift) / qshift})
      row.cells.push_back(fmt(v));
    row.cells.push_back(err.token);
    row.failed = !err.token.empty();
    return row;
  });
  Output out(a.common.out);
  return emit_rows(out, header, rows);
}

// ---- rates ----------------------------------------------------------------

std::string rate_column(const rd_dissipator& d) {
  std::string name;
  switch (d.origin) {
    case RD_ORIGIN_SECOND_ORDER: name = "gamma"; break;
    case RD_ORIGIN_PURCELL: name = "purcell"; break;
    case RD_ORIGIN_DRESSED_DEPHASING: name = "dressed"; break;
    case RD_ORIGIN_PHOTON_ASSISTED_DEPHASING: name = "assisted"; break;
    case RD_ORIGIN_DRIVEN_EFFECTIVE: name = "driven"; break;
  }
  switch (d.qubit_op) {
    case RD_QOP_IDENTITY: break;
    case RD_QOP_LOWER: name += "_down" + std::to_string(d.level); break;
    case RD_QOP_RAISE: name += "_up" + std::to_string(d.level); break;
    case RD_QOP_PROJECT: name += "_proj" + std::to_string(d.level); break;
  }
  if (d.photon_op == RD_POP_ANNIHILATE) name += "_a";
  if (d.photon_op == RD_POP_CREATE) name += "_adag";
  return name;
}

struct RatesArgs {
  Common common;
  std::string sweep = "detuning:-3:3:161";
  bool keep_resonant = false;
};

int cmd_rates(const RatesArgs& a) {
  SystemPtr base = load_system(a.common);
  const Sweep sweep = parse_sweep(a.sweep);
  const rd_model model = parse_model(a.common.model);

  bool any_bath = false;
  for (rd_bath b : {RD_BATH_X, RD_BATH_Z, RD_BATH_R}) {
    int has = 0;
    rd_system_has_bath(base.get(), b, &has);
    any_bath = any_bath || has;
  }

  // Rate columns come from the operator list, which depends only on the
  // level count and model, so any sweep point can supply the names.
  std::vector<std::string> rate_names;
  if (any_bath) {
    size_t count = 0;
    check(rd_rates_list(base.get(), model, a.common.photons, nullptr, 0, &count), "rates");
    std::vector<rd_dissipator> list(count);
    check(rd_rates_list(base.get(), model, a.common.photons, list.data(), count, &count), "rates");
    for (const auto& d : list) rate_names.push_back(rate_column(d));
  }

  std::vector<std::string> header;
  const bool extra_col = sweep.param != RD_PARAM_DETUNING;
  if (extra_col) header.push_back(sweep.column());
  for (const char* c : {"delta0_ghz", "p0_rabi", "p0_jc", "d0", "c0_rabi", "c0_jc", "a0_rabi", "a0_jc"})
    header.emplace_back(c);
  header.insert(header.end(), rate_names.begin(), rate_names.end());
  header.emplace_back("error");

  const auto rows = run_sweep(base.get(), sweep, a.keep_resonant, [&](rd_system* sys, double value) {
    Row row;
    RowErrors err;
    double delta = 0.0;
    rd_system_get_param(sys, RD_PARAM_DETUNING, &delta);
    if (extra_col) row.cells.push_back(fmt(value));
    row.cells.push_back(fmt(delta));
    rd_prefactors rabi{NAN, NAN, NAN, NAN}, jc{NAN, NAN, NAN, NAN};
    err.note(rd_prefactors_get(sys, 0, RD_MODEL_RABI, &rabi));
    err.note(rd_prefactors_get(sys, 0, RD_MODEL_JC, &jc));
    for (double v : {rabi.p, jc.p, rabi.d, rabi.c, jc.c, rabi.a, jc.a}) row.cells.push_back(fmt(v));
    if (any_bath) {
      std::vector<rd_dissipator> list(rate_names.size());
      size_t count = 0;
      const rd_status s = rd_rates_list(sys, model, a.common.photons, list.data(), list.size(), &count);
      err.note(s);
      for (std::size_t i = 0; i < rate_names.size(); ++i)
        row.cells.push_back(s == RD_OK && i < count ? fmt(list[i].rate_mhz) : "nan");
    }
    row.cells.push_back(err.token);
    row.failed = !err.token.empty();
    return row;
  });
  Output out(a.common.out);
  return emit_rows(out, header, rows);
}

// ---- exact ----------------------------------------------------------------

struct ExactArgs {
  Common common;
  std::string sweep;
};

int cmd_exact(const ExactArgs& a) {
  SystemPtr base = load_system(a.common);
  if (a.sweep.empty()) {
    if (a.common.out.empty()) throw CliError{kExitConfig, "exact without --sweep needs --out for the matrix CSV"};
    const rd_status s = rd_write_hamiltonian_csv(base.get(), parse_model(a.common.model), a.common.out.c_str());
    if (s != RD_OK) throw CliError{exit_code_for(s), rd_last_error()};
    return kExitOk;
  }
  const Sweep sweep = parse_sweep(a.sweep);
  const bool extra_col = sweep.param != RD_PARAM_DETUNING;
  std::vector<std::string> header;
  if (extra_col) header.push_back(sweep.column());
  for (const char* c : {"delta0_ghz", "exact_pull_rabi", "exact_qshift_rabi", "exact_pull_jc", "exact_qshift_jc",
                        "error"})
    header.emplace_back(c);
  // Exact-only sweeps are allowed to cross resonance.
  const auto rows = run_sweep(base.get(), sweep, true, [&](rd_system* sys, double value) {
    Row row;
    RowErrors err;
    double delta = 0.0;
    rd_system_get_param(sys, RD_PARAM_DETUNING, &delta);
    if (extra_col) row.cells.push_back(fmt(value));
    row.cells.push_back(fmt(delta));
    for (rd_model m : {RD_MODEL_RABI, RD_MODEL_JC}) {
      double pull = NAN, qshift = NAN;
      err.note(rd_exact_shifts(sys, m, &pull, &qshift));
      row.cells.push_back(fmt(pull));
      row.cells.push_back(fmt(qshift));
    }
    row.cells.push_back(err.token);
    row.failed = !err.token.empty();
    return row;
  });
  Output out(a.common.out);
  return emit_rows(out, header, rows);
}

// ---- fit ------------------------------------------------------------------

struct FitArgs {
  std::string config;
  std::string input;
  std::string model = "rabi";
  std::string observable = "resonator";
  std::string x_column = "delta0_ghz";
  std::string y_column;
  std::string out;
  std::string residuals;
  double omega_r = 5.0;
  double anharmonicity = 0.25;
  int levels = 3;
  double exclude = 0.0;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

int cmd_fit(const FitArgs& a) {
  double omega_r = a.omega_r, anharm = a.anharmonicity;
  int levels = a.levels;
  if (!a.config.empty()) {
    Common c;
    c.config = a.config;
    SystemPtr sys = load_system(c);
    double n = 0;
    check(rd_system_get_param(sys.get(), RD_PARAM_OMEGA_R, &omega_r), "config");
    check(rd_system_get_param(sys.get(), RD_PARAM_ANHARMONICITY, &anharm), "config");
    check(rd_system_get_param(sys.get(), RD_PARAM_NUM_QUBIT_LEVELS, &n), "config");
    levels = static_cast<int>(n);
  }
  const rd_observable obs = a.observable == "qubit" ? RD_OBS_QUBIT : RD_OBS_RESONATOR;
  const std::string y_col = !a.y_column.empty() ? a.y_column : (obs == RD_OBS_QUBIT ? "exact_qshift" : "exact_pull");

  std::ifstream in(a.input);
  if (!in) throw CliError{kExitIo, "cannot read " + a.input};
  std::string line;
  if (!std::getline(in, line)) throw CliError{kExitIo, a.input + " is empty"};
  const auto header = split_csv_line(line);
  const auto find = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw CliError{kExitConfig, "column '" + name + "' not in " + a.input};
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t xi = find(a.x_column), yi = find(y_col);
  std::vector<double> xs, ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() <= std::max(xi, yi)) continue;
    char* end = nullptr;
    const double x = std::strtod(cells[xi].c_str(), &end);
    const double y = std::strtod(cells[yi].c_str(), &end);
    if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) < a.exclude) continue;
    xs.push_back(x);
    ys.push_back(y);
  }

  rd_fit_result r{};
  std::vector<double> residuals(xs.size());
  const rd_status s = rd_fit_g0(xs.data(), ys.data(), xs.size(), parse_model(a.model), obs, omega_r, anharm, levels,
                                &r, residuals.data());
  if (s != RD_OK) throw CliError{exit_code_for(s), std::string("fit: ") + rd_last_error()};

  std::cout << "model        " << a.model << "\n"
            << "observable   " << a.observable << "\n"
            << "points       " << xs.size() << "\n"
            << "g0_ghz       " << fmt(r.g0) << "\n"
            << "stderr_ghz   " << fmt(r.stderr_g0) << "\n"
            << "residual_sum " << fmt(r.residual_sum) << "\n"
            << "iterations   " << r.iterations << "\n";

  if (!a.out.empty()) {
    Output json(a.out);
    json.stream() << "{\n  \"model\": \"" << a.model << "\",\n  \"observable\": \"" << a.observable
                  << "\",\n  \"points\": " << xs.size() << ",\n  \"g0_ghz\": " << fmt(r.g0)
                  << ",\n  \"stderr_ghz\": " << fmt(r.stderr_g0) << ",\n  \"residual_sum\": " << fmt(r.residual_sum)
                  << ",\n  \"iterations\": " << r.iterations << "\n}\n";
    json.finish();
  }
  if (!a.residuals.empty()) {
    Output csv(a.residuals);
    write_row(csv.stream(), {a.x_column, "observed", "residual"});
    for (std::size_t i = 0; i < xs.size(); ++i) write_row(csv.stream(), {fmt(xs[i]), fmt(ys[i]), fmt(residuals[i])});
    csv.finish();
  }
  return kExitOk;
}

// ---- evolve / steady ------------------------------------------------------

struct DynamicsArgs {
  Common common;
  std::string mode = "dressed";
  std::string init = "ground";
  double tmax = 100.0;
  double dt_out = 1.0;
  double tol = 1e-10;
};

rd_initial_state parse_init(const std::string& text) {
  rd_initial_state s{RD_INIT_GROUND, 0, 0, 0.0};
  if (text == "ground") return s;
  try {
    if (text.rfind("fock:", 0) == 0) {
      const auto comma = text.find(',', 5);
      if (comma == std::string::npos) throw CliError{kExitConfig, "--init fock:K,N"};
      s.kind = RD_INIT_FOCK;
      s.level = std::stoi(text.substr(5, comma - 5));
      s.photons = std::stoi(text.substr(comma + 1));
      return s;
    }
    if (text.rfind("thermal:", 0) == 0) {
      s.kind = RD_INIT_THERMAL;
      s.temperature = std::stod(text.substr(8));
      return s;
    }
  } catch (const std::logic_error&) {
  }
  throw CliError{kExitConfig, "unrecognised --init '" + text + "'"};
}

using GeneratorPtr = std::unique_ptr<rd_generator, decltype(&rd_generator_free)>;

GeneratorPtr build_generator(const DynamicsArgs& a, int& nq, int& nr) {
  SystemPtr sys = load_system(a.common);
  const rd_status v = rd_system_validate(sys.get());
  for (size_t i = 0; i < rd_system_warning_count(sys.get()); ++i)
    std::cerr << "warning: " << rd_system_warning(sys.get(), i) << "\n";
  if (v != RD_OK) throw CliError{exit_code_for(v), rd_last_error()};
  double q = 0, r = 0;
  rd_system_get_param(sys.get(), RD_PARAM_NUM_QUBIT_LEVELS, &q);
  rd_system_get_param(sys.get(), RD_PARAM_FOCK_TRUNCATION, &r);
  nq = static_cast<int>(q);
  nr = static_cast<int>(r);
  const rd_mode mode = a.mode == "bare" ? RD_MODE_BARE_PLUS_INTERACTION : RD_MODE_DRESSED_ANALYTIC;
  rd_generator* raw = nullptr;
  check(rd_generator_assemble(sys.get(), parse_model(a.common.model), mode, a.common.photons, &raw), "generator");
  return GeneratorPtr(raw, &rd_generator_free);
}

int cmd_evolve(const DynamicsArgs& a) {
  int nq = 0, nr = 0;
  GeneratorPtr gen = build_generator(a, nq, nr);
  const rd_initial_state init = parse_init(a.init);
  rd_trajectory* raw = nullptr;
  check(rd_evolve(gen.get(), &init, a.tmax, a.dt_out, a.tol, &raw), "evolve");
  std::unique_ptr<rd_trajectory, decltype(&rd_trajectory_free)> traj(raw, &rd_trajectory_free);

  std::vector<std::string> header{"t_ns", "trace", "mean_photons"};
  for (int k = 0; k < nq; ++k) header.push_back("pop_q" + std::to_string(k));
  for (int k = 0; k < nq; ++k)
    for (int n = 0; n < nr; ++n) header.push_back("rho_" + std::to_string(k) + "_" + std::to_string(n));

  Output out(a.common.out);
  write_row(out.stream(), header);
  const int d = nq * nr;
  for (size_t step = 0; step < rd_trajectory_size(traj.get()); ++step) {
    std::vector<double> diag(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      double re = 0, im = 0;
      check(rd_trajectory_element(traj.get(), step, i, i, &re, &im), "trajectory");
      diag[static_cast<std::size_t>(i)] = re;
    }
    double trace = 0, photons = 0;
    std::vector<double> pops(static_cast<std::size_t>(nq), 0.0);
    for (int k = 0; k < nq; ++k) {
      for (int n = 0; n < nr; ++n) {
        const double p = diag[static_cast<std::size_t>(k * nr + n)];
        trace += p;
        photons += n * p;
        pops[static_cast<std::size_t>(k)] += p;
      }
    }
    std::vector<std::string> cells{fmt(rd_trajectory_time(traj.get(), step)), fmt(trace), fmt(photons)};
    for (double p : pops) cells.push_back(fmt(p));
    for (double p : diag) cells.push_back(fmt(p));
    write_row(out.stream(), cells);
  }
  out.finish();
  return kExitOk;
}

int cmd_steady(const DynamicsArgs& a) {
  int nq = 0, nr = 0;
  GeneratorPtr gen = build_generator(a, nq, nr);
  const auto d = static_cast<std::size_t>(rd_generator_dim(gen.get()));
  std::vector<double> re(d * d), im(d * d);
  check(rd_steady_state(gen.get(), re.data(), im.data(), d * d), "steady state");
  Output out(a.common.out);
  write_row(out.stream(), {"level", "photons", "row", "col", "re", "im"});
  double photons = 0;
  for (std::size_t r = 0; r < d; ++r) {
    photons += static_cast<double>(r % static_cast<std::size_t>(nr)) * re[r * d + r];
    for (std::size_t c = 0; c < d; ++c) {
      if (re[r * d + c] == 0.0 && im[r * d + c] == 0.0) continue;
      write_row(out.stream(), {std::to_string(r / static_cast<std::size_t>(nr)),
                               std::to_string(r % static_cast<std::size_t>(nr)), std::to_string(r), std::to_string(c),
                               fmt(re[r * d + c]), fmt(im[r * d + c])});
    }
  }
  out.finish();
  std::cerr << "mean photon number " << fmt(photons) << "\n";
  return kExitOk;
}

// ---- plot -----------------------------------------------------------------

struct PlotArgs {
  std::string input;
  std::string x_column = "delta0_ghz";
  std::vector<std::string> columns;
  bool log_y = false;
  std::string out;
};

int cmd_plot(const PlotArgs& a) {
  std::vector<const char*> ys;
  for (const auto& c : a.columns) ys.push_back(c.c_str());
  const rd_status s =
      rd_plot_svg(a.input.c_str(), a.x_column.c_str(), ys.data(), ys.size(), a.log_y ? 1 : 0, a.out.c_str());
  if (s != RD_OK) throw CliError{exit_code_for(s), rd_last_error()};
  return kExitOk;
}

void add_common(CLI::App* cmd, Common& c, bool photons) {
  cmd->add_option("--config", c.config, "system configuration (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--model", c.model, "interaction model")->check(CLI::IsMember({"rabi", "jc"}));
  cmd->add_option("--out", c.out, "output path (stdout when omitted)");
  cmd->add_option("--nq", c.nq, "number of qubit levels");
  cmd->add_option("--nr", c.nr, "Fock truncation");
  if (photons) cmd->add_option("--photons", c.photons, "mean drive photon number for driven effective rates");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rabidisp: dispersive shifts, rates and master-equation tools for qubit-resonator systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rd_version()));

  ShiftsArgs shifts;
  auto* c_shifts = app.add_subcommand("shifts", "analytic vs exact dispersive shifts over a sweep");
  add_common(c_shifts, shifts.common, false);
  c_shifts->add_option("--sweep", shifts.sweep, "VAR:START:STOP:COUNT with VAR in detuning|coupling|temperature");
  c_shifts->add_flag("--keep-resonant", shifts.keep_resonant, "do not drop points with |delta0| < 3 g0");
  c_shifts->add_flag("--no-exact", shifts.no_exact, "skip exact diagonalization");

  RatesArgs rates;
  auto* c_rates = app.add_subcommand("rates", "rate prefactors and bath rates over a sweep");
  add_common(c_rates, rates.common, true);
  c_rates->add_option("--sweep", rates.sweep, "VAR:START:STOP:COUNT");
  c_rates->add_flag("--keep-resonant", rates.keep_resonant, "do not drop points with |delta0| < 3 g0");

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "exact shifts over a sweep, or the Hamiltonian matrix");
  add_common(c_exact, exact.common, false);
  c_exact->add_option("--sweep", exact.sweep, "VAR:START:STOP:COUNT");

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "fit g0 to shift data");
  c_fit->add_option("--in", fit.input, "input CSV")->required()->check(CLI::ExistingFile);
  c_fit->add_option("--config", fit.config, "take omega_r, anharmonicity and level count from a config");
  c_fit->add_option("--model", fit.model)->check(CLI::IsMember({"rabi", "jc"}));
  c_fit->add_option("--observable", fit.observable)->check(CLI::IsMember({"resonator", "qubit"}));
  c_fit->add_option("--x", fit.x_column, "detuning column");
  c_fit->add_option("--y", fit.y_column, "shift column (default exact_pull or exact_qshift)");
  c_fit->add_option("--omega-r", fit.omega_r);
  c_fit->add_option("--anharmonicity", fit.anharmonicity);
  c_fit->add_option("--levels", fit.levels);
  c_fit->add_option("--exclude", fit.exclude, "drop points with |detuning| below this value");
  c_fit->add_option("--out", fit.out, "JSON report path");
  c_fit->add_option("--residuals", fit.residuals, "residual CSV path");

  DynamicsArgs evolve;
  auto* c_evolve = app.add_subcommand("evolve", "integrate the master equation");
  add_common(c_evolve, evolve.common, true);
  c_evolve->add_option("--mode", evolve.mode)->check(CLI::IsMember({"dressed", "bare"}));
  c_evolve->add_option("--init", evolve.init, "ground | fock:K,N | thermal:T");
  c_evolve->add_option("--tmax", evolve.tmax, "final time in ns");
  c_evolve->add_option("--dt-out", evolve.dt_out, "output spacing in ns");
  c_evolve->add_option("--tol", evolve.tol, "integrator tolerance");

  DynamicsArgs steady;
  auto* c_steady = app.add_subcommand("steady", "steady state of the master equation");
  add_common(c_steady, steady.common, true);
  c_steady->add_option("--mode", steady.mode)->check(CLI::IsMember({"dressed", "bare"}));

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot", "SVG line plot of CSV columns");
  c_plot->add_option("--in", plot.input, "input CSV")->required()->check(CLI::ExistingFile);
  c_plot->add_option("--x", plot.x_column, "x column");
  c_plot->add_option("--columns", plot.columns, "y columns")->required()->delimiter(',');
  c_plot->add_flag("--logy", plot.log_y, "logarithmic y axis");
  c_plot->add_option("--out", plot.out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*c_shifts) return cmd_shifts(shifts);
    if (*c_rates) return cmd_rates(rates);
    if (*c_exact) return cmd_exact(exact);
    if (*c_fit) return cmd_fit(fit);
    if (*c_evolve) return cmd_evolve(evolve);
    if (*c_steady) return cmd_steady(steady);
    if (*c_plot) return cmd_plot(plot);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitOk;
}
