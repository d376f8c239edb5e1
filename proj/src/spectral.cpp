#include "rabidisp/spectral.hpp"

#include <cmath>
#include <limits>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double density(const SpectralModel& model, double w) {
  return std::visit(overloaded{
                        [w](const Ohmic& m) { return m.eta * w * std::exp(-w / m.cutoff_ghz); },
                        [w](const OneOverF& m) { return m.amplitude / std::max(w, m.ir_floor_ghz); },
                        [](const Flat& m) { return m.level_mhz; },
                    },
                    model);
}

}  // namespace

SpectralFunction::SpectralFunction(SpectralModel model, double temperature_ghz)
    : model_(std::move(model)), temperature_(temperature_ghz) {
  if (!(temperature_ >= 0.0)) throw Error(ErrorCode::InvalidArgument, "bath temperature must be >= 0");
}

SpectralFunction SpectralFunction::with_temperature(double temperature_ghz) const {
  return SpectralFunction(model_, temperature_ghz);
}

double SpectralFunction::spectral_density(double omega) const {
  if (omega < 0.0) throw Error(ErrorCode::NegativeFrequency, "spectral density needs omega >= 0");
  return density(model_, omega);
}

double SpectralFunction::dc_limit() const {
  const double t = temperature_;
  return std::visit(overloaded{
                        [t](const Ohmic& m) { return m.eta * t; },
                        [t](const OneOverF& m) {
                          // 1/2 J(w) coth(w / 2T) at the floor
                          const double j = m.amplitude / m.ir_floor_ghz;
                          if (t == 0.0) return 0.5 * j;
                          return 0.5 * j / std::tanh(m.ir_floor_ghz / (2.0 * t));
                        },
                        [](const Flat& m) { return m.level_mhz; },
                    },
                    model_);
}

// 1/2 (coth(x/2) + 1) = n + 1 and 1/2 (coth(x/2) - 1) = n with
// n = 1 / expm1(x), x = |w| / T.
double SpectralFunction::evaluate(double omega) const {
  if (omega == 0.0) return dc_limit();
  const double w = std::abs(omega);
  const double j = density(model_, w);
  if (temperature_ == 0.0) return omega > 0.0 ? j : 0.0;
  const double em1 = std::expm1(w / temperature_);
  if (omega > 0.0) return j * (1.0 + 1.0 / em1);
  return j / em1;
}

double SpectralFunction::log_evaluate(double omega) const {
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  if (omega == 0.0) {
    const double c = dc_limit();
    return c > 0.0 ? std::log(c) : neg_inf;
  }
  const double w = std::abs(omega);
  const double j = density(model_, w);
  if (j <= 0.0) return neg_inf;
  if (temperature_ == 0.0) return omega > 0.0 ? std::log(j) : neg_inf;
  const double x = w / temperature_;
  // log(n + 1) = -log(1 - e^{-x});  log n = -x - log(1 - e^{-x})
  const double log_np1 = -std::log(-std::expm1(-x));
  return std::log(j) + (omega > 0.0 ? log_np1 : log_np1 - x);
}

}  // namespace rabidisp
