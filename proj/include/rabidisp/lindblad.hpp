#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "rabidisp/exact.hpp"
#include "rabidisp/model.hpp"
#include "rabidisp/rates.hpp"

namespace rabidisp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

// Time is in ns. Hamiltonians are stored in GHz and rates in MHz, both as
// /2pi values; the generator works in angular units:
//   drho/dt = 2pi ( -i [H, rho] + 1e-3 sum_j gamma_j D[o_j] rho ).

enum class GeneratorMode { DressedAnalytic, BarePlusInteraction };

struct Jump {
  SparseCMatrix op;
  double rate_mhz = 0.0;
};

/// Lindblad superoperator on vec(rho) (column stacking).
class LindbladGenerator {
 public:
  LindbladGenerator(const CMatrix& hamiltonian_ghz, std::vector<Jump> jumps, ProductSpace space);

  const ProductSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const CMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const SparseCMatrix& superoperator() const { return super_; }

  /// L rho, in 1/ns.
  CMatrix apply(const CMatrix& rho) const;

 private:
  ProductSpace space_;
  CMatrix hamiltonian_;
  std::vector<Jump> jumps_;
  SparseCMatrix super_;
};

SparseCMatrix jump_matrix(const JumpOperator& op, const ProductSpace& space);

/// D[o] rho = o rho o^dag - 1/2 {o^dag o, rho}.
CMatrix apply_dissipator(const CMatrix& op, const CMatrix& rho);

/// DressedAnalytic: diagonal H0 + H2 with second- and fourth-order dissipators
/// of table.model (plus `extra`, e.g. driven effective rates).
/// BarePlusInteraction: H0 + H_int with second-order dissipators only.
LindbladGenerator assemble(const SystemSpec& spec, const RateTable& table, GeneratorMode mode,
                           const std::vector<DissipatorTerm>& extra = {});

struct EvolveOptions {
  double t_max_ns = 1.0;
  double dt_out_ns = 0.01;
  double tolerance = 1e-10;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<CMatrix> states;
};

/// Adaptive Dormand-Prince integration; rho is re-symmetrized after every
/// accepted step. Throws StepUnderflow.
Trajectory evolve(const LindbladGenerator& generator, const CMatrix& rho0, const EvolveOptions& options);

/// Unique null vector of L with unit trace. Throws DegenerateNullSpace.
CMatrix steady_state(const LindbladGenerator& generator);

CMatrix partial_trace_resonator(const CMatrix& rho, const ProductSpace& space);

CMatrix ground_state(const ProductSpace& space);
CMatrix fock_state(const ProductSpace& space, int level, int photons);
/// Gibbs state of the bare H0 at temperature T (GHz); T = 0 gives the ground state.
CMatrix thermal_state(const SystemSpec& spec, const ProductSpace& space, double temperature_ghz);

struct DisplacementCheck {
  double deviation = 0.0;       // max |reduced(LHS - RHS)| over the test states
  double effective_rate = 0.0;  // qubit decay rate of the displaced-frame remainder, per unit rate
};

/// Compares D[Disp^dag sigma_{k,k+1} a^dag Disp] with
/// D[sigma_{k,k+1} a^dag] + |alpha|^2 D[sigma_{k,k+1}] after tracing out the
/// resonator, on product states rho_q (x) rho_thermal. Throws
/// TruncationTooSmall when |alpha|^2 > M / 4.
DisplacementCheck verify_displacement_identity(Complex alpha, int k, const ProductSpace& space);

}  // namespace rabidisp
