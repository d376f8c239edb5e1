#pragma once

#include <variant>

namespace rabidisp {

// Bath spectral densities J(w). Parameters are chosen so that J, and hence
// C(w), comes out directly as a rate in MHz.
struct Ohmic {
  double eta = 1.0;         // MHz per GHz
  double cutoff_ghz = 1e3;  // exponential cutoff
};

struct OneOverF {
  double amplitude = 1.0;       // MHz * GHz
  double ir_floor_ghz = 1e-3;   // J is held at A / ir_floor below the floor
};

struct Flat {
  double level_mhz = 0.0;
};

using SpectralModel = std::variant<Ohmic, OneOverF, Flat>;

/// Thermal noise-power spectrum of one bosonic bath,
///   C(w) = 1/2 J(|w|) (coth(|w| / 2T) + sign(w)),
/// which satisfies C(w) / C(-w) = exp(w / T) by construction.
class SpectralFunction {
 public:
  SpectralFunction() : model_(Flat{}), temperature_(0.0) {}
  SpectralFunction(SpectralModel model, double temperature_ghz);

  const SpectralModel& model() const { return model_; }
  double temperature() const { return temperature_; }
  SpectralFunction with_temperature(double temperature_ghz) const;

  /// J(w) for w >= 0. Throws NegativeFrequency otherwise.
  double spectral_density(double omega_ghz) const;

  /// C(w) in MHz. Total: at w = 0 the model's dc limit is returned
  /// (Ohmic: eta T, Flat: the plateau level, OneOverF: the symmetrized
  /// value at the infrared floor).
  double evaluate(double omega_ghz) const;

  /// log C(w), finite even where C(-w) underflows (|w| / T >> 700).
  /// Returns -inf where C(w) is exactly zero.
  double log_evaluate(double omega_ghz) const;

  /// Value assigned at w = 0.
  double dc_limit() const;

 private:
  SpectralModel model_;
  double temperature_;
};

}  // namespace rabidisp
