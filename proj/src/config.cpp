#include "rabidisp/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rabidisp/error.hpp"

namespace rabidisp {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys = {
    "omega_r_ghz", "omega_10_ghz", "anharmonicity_ghz", "g0_ghz", "num_qubit_levels", "fock_truncation", "model",
    "temperature_ghz", "bath_X", "bath_Z", "bath_R", "beta", "dephasing_sensitivities"};

double number(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::Config, path + "." + key + ": missing");
  if (!it->is_number()) throw Error(ErrorCode::Config, path + "." + key + ": expected a number");
  return it->get<double>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& path) {
  return obj.contains(key) ? number(obj, key, path) : fallback;
}

SpectralFunction parse_bath(const json& obj, double default_temperature, const std::string& path) {
  if (!obj.is_object()) throw Error(ErrorCode::Config, path + ": expected an object");
  const std::string model = obj.value("model", "");
  const double t = number_or(obj, "temperature_ghz", default_temperature, path);
  if (t < 0.0) throw Error(ErrorCode::Config, path + ".temperature_ghz: must be >= 0");
  if (model == "ohmic") {
    Ohmic m{number(obj, "eta", path), number_or(obj, "cutoff_ghz", Ohmic{}.cutoff_ghz, path)};
    if (m.eta < 0.0 || m.cutoff_ghz <= 0.0) throw Error(ErrorCode::Config, path + ": eta >= 0, cutoff > 0 required");
    return {m, t};
  }
  if (model == "one_over_f") {
    OneOverF m{number(obj, "amplitude", path), number_or(obj, "ir_floor_ghz", OneOverF{}.ir_floor_ghz, path)};
    if (m.amplitude < 0.0 || m.ir_floor_ghz <= 0.0) {
      throw Error(ErrorCode::Config, path + ": amplitude >= 0, ir_floor > 0 required");
    }
    return {m, t};
  }
  if (model == "flat") {
    Flat m{number(obj, "level", path)};
    if (m.level_mhz < 0.0) throw Error(ErrorCode::Config, path + ".level: must be >= 0");
    return {m, t};
  }
  throw Error(ErrorCode::Config, path + ".model: expected ohmic, one_over_f or flat");
}

json dump_bath(const SpectralFunction& sf) {
  json out;
  if (const auto* m = std::get_if<Ohmic>(&sf.model())) {
    out = {{"model", "ohmic"}, {"eta", m->eta}, {"cutoff_ghz", m->cutoff_ghz}};
  } else if (const auto* m = std::get_if<OneOverF>(&sf.model())) {
    out = {{"model", "one_over_f"}, {"amplitude", m->amplitude}, {"ir_floor_ghz", m->ir_floor_ghz}};
  } else {
    out = {{"model", "flat"}, {"level", std::get<Flat>(sf.model()).level_mhz}};
  }
  out["temperature_ghz"] = sf.temperature();
  return out;
}

std::vector<double> number_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw Error(ErrorCode::Config, path + ": expected an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw Error(ErrorCode::Config, path + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

SystemSpec Config::system() const {
  SystemSpec s;
  s.qubit = expand_transmon(transmon);
  s.resonator = resonator;
  s.interaction = model;
  s.baths = baths;
  return s;
}

void Config::set_temperature(double t) {
  temperature_ghz = t;
  for (auto& b : baths) b = b.with_temperature(t);
}

Config parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Config, std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::Config, "config must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (!kTopLevelKeys.count(key)) throw Error(ErrorCode::Config, "unknown key '" + key + "'");
  }
  const std::string path = "config";
  Config c;
  c.resonator.omega_r = number(root, "omega_r_ghz", path);
  c.transmon.omega_10 = number(root, "omega_10_ghz", path);
  c.transmon.anharmonicity = number_or(root, "anharmonicity_ghz", 0.0, path);
  c.transmon.g0 = number(root, "g0_ghz", path);
  c.transmon.num_levels = static_cast<int>(number_or(root, "num_qubit_levels", 2, path));
  c.resonator.fock_truncation = static_cast<int>(number_or(root, "fock_truncation", 10, path));
  c.temperature_ghz = number_or(root, "temperature_ghz", 0.0, path);
  if (c.temperature_ghz < 0.0) throw Error(ErrorCode::Config, "config.temperature_ghz: must be >= 0");
  const std::string model = root.value("model", "rabi");
  if (model == "rabi") {
    c.model = Interaction::Rabi;
  } else if (model == "jc") {
    c.model = Interaction::JaynesCummings;
  } else {
    throw Error(ErrorCode::Config, "config.model: expected rabi or jc");
  }
  const char* bath_keys[3] = {"bath_X", "bath_Z", "bath_R"};
  for (int i = 0; i < 3; ++i) {
    if (root.contains(bath_keys[i])) {
      c.baths[static_cast<std::size_t>(i)] = parse_bath(root[bath_keys[i]], c.temperature_ghz, bath_keys[i]);
    } else {
      c.baths[static_cast<std::size_t>(i)] = SpectralFunction(Flat{0.0}, c.temperature_ghz);
    }
  }
  if (root.contains("beta")) c.transmon.beta_override = number_list(root["beta"], "config.beta");
  if (root.contains("dephasing_sensitivities")) {
    c.transmon.dephasing_override = number_list(root["dephasing_sensitivities"], "config.dephasing_sensitivities");
  }
  if (c.transmon.g0 < 0.0) throw Error(ErrorCode::Config, "config.g0_ghz: must be >= 0");
  if (c.transmon.num_levels < 2) throw Error(ErrorCode::Config, "config.num_qubit_levels: must be >= 2");
  if (c.resonator.fock_truncation < 2) throw Error(ErrorCode::Config, "config.fock_truncation: must be >= 2");
  if (c.resonator.omega_r <= 0.0) throw Error(ErrorCode::Config, "config.omega_r_ghz: must be > 0");
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const Config& c) {
  json root = {{"omega_r_ghz", c.resonator.omega_r},
               {"omega_10_ghz", c.transmon.omega_10},
               {"anharmonicity_ghz", c.transmon.anharmonicity},
               {"g0_ghz", c.transmon.g0},
               {"num_qubit_levels", c.transmon.num_levels},
               {"fock_truncation", c.resonator.fock_truncation},
               {"model", to_string(c.model)},
               {"temperature_ghz", c.temperature_ghz},
               {"bath_X", dump_bath(c.baths[0])},
               {"bath_Z", dump_bath(c.baths[1])},
               {"bath_R", dump_bath(c.baths[2])}};
  if (c.transmon.beta_override) root["beta"] = *c.transmon.beta_override;
  if (c.transmon.dephasing_override) root["dephasing_sensitivities"] = *c.transmon.dephasing_override;
  return root.dump(2);
}

}  // namespace rabidisp
