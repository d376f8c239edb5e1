#pragma once

#include <array>
#include <string>

#include "rabidisp/model.hpp"

namespace rabidisp {

/// Flat JSON configuration of a transmon-resonator system with three baths.
struct Config {
  TransmonSpec transmon;
  ResonatorSpec resonator;
  Interaction model = Interaction::Rabi;
  double temperature_ghz = 0.0;
  std::array<SpectralFunction, 3> baths{};

  SystemSpec system() const;
  /// Sets every bath temperature.
  void set_temperature(double temperature_ghz);
};

Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);
std::string dump_config(const Config& config);

}  // namespace rabidisp
