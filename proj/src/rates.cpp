#include "rabidisp/rates.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

bool in_ladder(const QubitSpec& q, int k) { return k >= 0 && k + 1 < q.num_levels(); }

void check(double den, double tol, int k) {
  if (std::abs(den) < tol) {
    std::ostringstream msg;
    msg << "rate prefactor denominator " << den << " GHz at level " << k;
    throw ResonanceError(k, msg.str());
  }
}

// g_j beta_j w_j / (w_r^2 - w_j^2), zero outside the ladder.
double rabi_amplitude(const QubitSpec& q, double wr, int j, double tol) {
  const double g = q.coupling(j) * q.beta(j);
  if (!in_ladder(q, j) || g == 0.0) return 0.0;
  const double w = q.splitting(j);
  check(wr - w, tol, j);
  check(wr + w, tol, j);
  return g * w / ((wr - w) * (wr + w));
}

// g_j beta_j / (w_r - w_j)
double jc_amplitude(const QubitSpec& q, double wr, int j, double tol) {
  const double g = q.coupling(j) * q.beta(j);
  if (!in_ladder(q, j) || g == 0.0) return 0.0;
  const double w = q.splitting(j);
  check(wr - w, tol, j);
  return g / (wr - w);
}

}  // namespace

std::string JumpOperator::label() const {
  std::ostringstream s;
  switch (qubit) {
    case QubitOp::Identity: break;
    case QubitOp::Lower: s << "sigma_" << level << "," << level + 1; break;
    case QubitOp::Raise: s << "sigma_" << level + 1 << "," << level; break;
    case QubitOp::Project: s << "sigma_" << level << "," << level; break;
  }
  if (photon != PhotonOp::None) {
    if (qubit != QubitOp::Identity) s << " ";
    s << (photon == PhotonOp::Annihilate ? "a" : "a^dag");
  }
  return s.str();
}

const char* to_string(RateOrigin origin) noexcept {
  switch (origin) {
    case RateOrigin::SecondOrder: return "second_order";
    case RateOrigin::Purcell: return "purcell";
    case RateOrigin::DressedDephasing: return "dressed_dephasing";
    case RateOrigin::PhotonAssistedDephasing: return "photon_assisted_dephasing";
    case RateOrigin::DrivenEffective: return "driven_effective";
  }
  return "unknown";
}

double purcell_prefactor(const QubitSpec& q, double wr, int k, Interaction model, double tol) {
  const double g = q.coupling(k);
  if (!in_ladder(q, k) || g == 0.0) return 0.0;
  const double w = q.splitting(k);
  check(wr - w, tol, k);
  if (model == Interaction::JaynesCummings) return 2.0 * g * g / ((wr - w) * (wr - w));
  check(wr + w, tol, k);
  const double den = (wr - w) * (wr + w);
  return 8.0 * g * g * wr * wr / (den * den);
}

std::pair<double, double> dressed_dephasing_prefactors(const QubitSpec& q, double wr, int k, Interaction model,
                                                       double tol) {
  const double g = q.coupling(k);
  const double dw = q.dephasing(k) - q.dephasing(k + 1);
  if (!in_ladder(q, k) || g == 0.0 || dw == 0.0) return {0.0, 0.0};
  const double w = q.splitting(k);
  check(wr - w, tol, k);
  const double num = 2.0 * g * g * dw * dw;
  const double d = num / ((wr - w) * (wr - w));
  const double c = model == Interaction::Rabi ? num / ((wr + w) * (wr + w)) : 0.0;
  return {d, c};
}

// Both interactions give a_k as a perfect square of the difference of the
// level-k and level-(k-1) amplitudes; expanding it yields the three-term form.
double photon_assisted_dephasing_prefactor(const QubitSpec& q, double wr, int k, Interaction model, double tol) {
  if (k < 0 || k >= q.num_levels()) return 0.0;
  if (model == Interaction::Rabi) {
    const double diff = rabi_amplitude(q, wr, k, tol) - rabi_amplitude(q, wr, k - 1, tol);
    return 8.0 * diff * diff;
  }
  const double diff = jc_amplitude(q, wr, k, tol) - jc_amplitude(q, wr, k - 1, tol);
  return 2.0 * diff * diff;
}

Prefactors prefactors(const QubitSpec& q, double wr, int k, Interaction model, double tol) {
  Prefactors p;
  p.purcell = purcell_prefactor(q, wr, k, model, tol);
  std::tie(p.dressed, p.counter) = dressed_dephasing_prefactors(q, wr, k, model, tol);
  p.assisted = photon_assisted_dephasing_prefactor(q, wr, k, model, tol);
  return p;
}

std::pair<double, double> purcell_rates(const SystemSpec& spec, int k, Interaction model) {
  const double p = purcell_prefactor(spec.qubit, spec.omega_r(), k, model);
  const double w = spec.qubit.splitting(k);
  const SpectralFunction& cr = spec.bath(Bath::R);
  return {p * cr.evaluate(w), p * cr.evaluate(-w)};
}

std::vector<DissipatorTerm> second_order_rates(const SystemSpec& spec) {
  const QubitSpec& q = spec.qubit;
  const SpectralFunction& cx = spec.bath(Bath::X);
  const SpectralFunction& cz = spec.bath(Bath::Z);
  const SpectralFunction& cr = spec.bath(Bath::R);
  std::vector<DissipatorTerm> out;
  constexpr auto origin = RateOrigin::SecondOrder;
  for (int k = 0; k + 1 < q.num_levels(); ++k) {
    const double b2 = q.beta(k) * q.beta(k);
    const double w = q.splitting(k);
    out.push_back({{QubitOp::Lower, k, PhotonOp::None}, b2 * cx.evaluate(w), origin});
    out.push_back({{QubitOp::Raise, k, PhotonOp::None}, b2 * cx.evaluate(-w), origin});
  }
  const double cz0 = cz.evaluate(0.0);
  for (int k = 0; k < q.num_levels(); ++k) {
    out.push_back({{QubitOp::Project, k, PhotonOp::None}, q.dephasing(k) * q.dephasing(k) * cz0, origin});
  }
  out.push_back({{QubitOp::Identity, 0, PhotonOp::Annihilate}, cr.evaluate(spec.omega_r()), origin});
  out.push_back({{QubitOp::Identity, 0, PhotonOp::Create}, cr.evaluate(-spec.omega_r()), origin});
  return out;
}

std::vector<DissipatorTerm> fourth_order_rates(const SystemSpec& spec, Interaction model) {
  const QubitSpec& q = spec.qubit;
  const double wr = spec.omega_r();
  const SpectralFunction& cx = spec.bath(Bath::X);
  const SpectralFunction& cz = spec.bath(Bath::Z);
  const SpectralFunction& cr = spec.bath(Bath::R);
  std::vector<DissipatorTerm> out;
  for (int k = 0; k + 1 < q.num_levels(); ++k) {
    const double w = q.splitting(k);
    const double p = purcell_prefactor(q, wr, k, model);
    out.push_back({{QubitOp::Lower, k, PhotonOp::None}, p * cr.evaluate(w), RateOrigin::Purcell});
    out.push_back({{QubitOp::Raise, k, PhotonOp::None}, p * cr.evaluate(-w), RateOrigin::Purcell});

    const auto [d, c] = dressed_dephasing_prefactors(q, wr, k, model);
    constexpr auto dd = RateOrigin::DressedDephasing;
    out.push_back({{QubitOp::Lower, k, PhotonOp::Create}, d * cz.evaluate(w - wr), dd});
    out.push_back({{QubitOp::Raise, k, PhotonOp::Annihilate}, d * cz.evaluate(wr - w), dd});
    if (model == Interaction::Rabi) {
      out.push_back({{QubitOp::Lower, k, PhotonOp::Annihilate}, c * cz.evaluate(wr + w), dd});
      out.push_back({{QubitOp::Raise, k, PhotonOp::Create}, c * cz.evaluate(-w - wr), dd});
    }
  }
  const double cx_minus = cx.evaluate(wr);
  const double cx_plus = cx.evaluate(-wr);
  for (int k = 0; k < q.num_levels(); ++k) {
    const double a = photon_assisted_dephasing_prefactor(q, wr, k, model);
    constexpr auto pad = RateOrigin::PhotonAssistedDephasing;
    out.push_back({{QubitOp::Project, k, PhotonOp::Annihilate}, a * cx_minus, pad});
    out.push_back({{QubitOp::Project, k, PhotonOp::Create}, a * cx_plus, pad});
  }
  return out;
}

double RateTable::fourth_order_rate(const JumpOperator& op, RateOrigin origin) const {
  for (const auto& t : fourth_order) {
    if (t.origin == origin && t.op == op) return t.rate;
  }
  return 0.0;
}

RateTable rate_table(const SystemSpec& spec, Interaction model) {
  RateTable t;
  t.model = model;
  t.second_order = second_order_rates(spec);
  t.fourth_order = fourth_order_rates(spec, model);
  for (int k = 0; k < spec.qubit.num_levels(); ++k) {
    t.rabi.push_back(prefactors(spec.qubit, spec.omega_r(), k, Interaction::Rabi));
    t.jc.push_back(prefactors(spec.qubit, spec.omega_r(), k, Interaction::JaynesCummings));
  }
  return t;
}

std::vector<DissipatorTerm> driven_effective_rates(const RateTable& table, double n) {
  if (!(n >= 0.0)) throw Error(ErrorCode::NegativePhotonNumber, "photon number must be >= 0");
  std::vector<DissipatorTerm> out;
  if (n == 0.0) return out;
  const int levels = static_cast<int>(table.rabi.size());
  constexpr auto dd = RateOrigin::DressedDephasing;
  constexpr auto pad = RateOrigin::PhotonAssistedDephasing;
  constexpr auto driven = RateOrigin::DrivenEffective;
  for (int k = 0; k + 1 < levels; ++k) {
    const double down = table.fourth_order_rate({QubitOp::Lower, k, PhotonOp::Create}, dd) +
                        table.fourth_order_rate({QubitOp::Lower, k, PhotonOp::Annihilate}, dd);
    const double up = table.fourth_order_rate({QubitOp::Raise, k, PhotonOp::Create}, dd) +
                      table.fourth_order_rate({QubitOp::Raise, k, PhotonOp::Annihilate}, dd);
    out.push_back({{QubitOp::Lower, k, PhotonOp::None}, n * down, driven});
    out.push_back({{QubitOp::Raise, k, PhotonOp::None}, n * up, driven});
  }
  for (int k = 0; k < levels; ++k) {
    const double phi = table.fourth_order_rate({QubitOp::Project, k, PhotonOp::Create}, pad) +
                       table.fourth_order_rate({QubitOp::Project, k, PhotonOp::Annihilate}, pad);
    out.push_back({{QubitOp::Project, k, PhotonOp::None}, n * phi, driven});
  }
  return out;
}

}  // namespace rabidisp
