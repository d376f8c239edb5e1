#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rabidisp/dispersive.hpp"
#include "rabidisp/model.hpp"

namespace rabidisp {

enum class QubitOp {
  Identity,  // 1
  Lower,     // sigma_{k,k+1}
  Raise,     // sigma_{k+1,k}
  Project,   // sigma_{k,k}
};

enum class PhotonOp { None, Annihilate, Create };

struct JumpOperator {
  QubitOp qubit = QubitOp::Identity;
  int level = 0;
  PhotonOp photon = PhotonOp::None;

  bool is_product() const { return qubit != QubitOp::Identity && photon != PhotonOp::None; }
  std::string label() const;
  friend bool operator==(const JumpOperator&, const JumpOperator&) = default;
};

enum class RateOrigin { SecondOrder, Purcell, DressedDephasing, PhotonAssistedDephasing, DrivenEffective };

const char* to_string(RateOrigin origin) noexcept;

struct DissipatorTerm {
  JumpOperator op;
  double rate = 0.0;  // MHz
  RateOrigin origin = RateOrigin::SecondOrder;
};

/// Dimensionless fourth-order prefactors of one qubit level.
struct Prefactors {
  double purcell = 0.0;   // p_k
  double dressed = 0.0;   // d_k
  double counter = 0.0;   // c_k
  double assisted = 0.0;  // a_k
};

double purcell_prefactor(const QubitSpec& qubit, double omega_r, int k, Interaction model,
                         double tol = kResonanceTolerance);

/// (d_k, c_k). c_k vanishes identically for the JC interaction.
std::pair<double, double> dressed_dephasing_prefactors(const QubitSpec& qubit, double omega_r, int k,
                                                       Interaction model, double tol = kResonanceTolerance);

double photon_assisted_dephasing_prefactor(const QubitSpec& qubit, double omega_r, int k, Interaction model,
                                           double tol = kResonanceTolerance);

Prefactors prefactors(const QubitSpec& qubit, double omega_r, int k, Interaction model,
                      double tol = kResonanceTolerance);

/// Purcell (decay, excitation) rates of transition k. The resonator bath is
/// probed at the qubit frequency.
std::pair<double, double> purcell_rates(const SystemSpec& spec, int k, Interaction model);

/// Qubit decay/excitation/dephasing and resonator loss/gain.
std::vector<DissipatorTerm> second_order_rates(const SystemSpec& spec);

/// Purcell, dressed dephasing and photon-assisted dephasing terms.
std::vector<DissipatorTerm> fourth_order_rates(const SystemSpec& spec, Interaction model);

struct RateTable {
  Interaction model = Interaction::Rabi;
  std::vector<DissipatorTerm> second_order;
  std::vector<DissipatorTerm> fourth_order;
  std::vector<Prefactors> rabi;
  std::vector<Prefactors> jc;

  const std::vector<Prefactors>& prefactors(Interaction which) const {
    return which == Interaction::Rabi ? rabi : jc;
  }
  /// Rate of the fourth-order term with the given operator and origin, 0 if absent.
  double fourth_order_rate(const JumpOperator& op, RateOrigin origin) const;
};

/// Computes both models' prefactors and the rate lists for `model` in one pass.
RateTable rate_table(const SystemSpec& spec, Interaction model);

/// Qubit-only dissipators of a resonator driven to photon number n:
/// n times the sum of each +/- partner pair (decay, excitation, dephasing).
std::vector<DissipatorTerm> driven_effective_rates(const RateTable& table, double photons);

}  // namespace rabidisp
