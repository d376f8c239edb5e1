#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "rabidisp/model.hpp"

namespace rabidisp {

/// Qubit (x) Fock product basis, index = k * fock_dim + n.
struct ProductSpace {
  int qubit_dim = 2;
  int fock_dim = 2;

  int dim() const { return qubit_dim * fock_dim; }
  int index(int k, int n) const { return k * fock_dim + n; }
  int level_of(int i) const { return i / fock_dim; }
  int photons_of(int i) const { return i % fock_dim; }
};

inline constexpr int kDefaultDimensionCap = 4096;

/// H0 + H_int on the truncated product space, in GHz. Real symmetric.
Eigen::MatrixXd build_hamiltonian(const QubitSpec& qubit, const ResonatorSpec& resonator, Interaction model,
                                  int dimension_cap = kDefaultDimensionCap);

/// Diagonal of H0 on the product space.
Eigen::VectorXd bare_energies(const QubitSpec& qubit, const ResonatorSpec& resonator);

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

Spectrum diagonalize(const Eigen::MatrixXd& hamiltonian);

/// Bare-state to eigenvector assignment by maximal overlap.
struct DressedLabels {
  ProductSpace space;
  std::vector<int> eigen_index;  // per basis index; -1 when ambiguous
  std::vector<double> overlap;   // best |<k,n|v>|^2 found for that basis state

  bool assigned(int k, int n) const { return eigen_index[space.index(k, n)] >= 0; }
  /// Throws AmbiguousLabeling when (k, n) could not be assigned.
  int at(int k, int n) const;
};

inline constexpr double kLabelThreshold = 0.5;

DressedLabels label_dressed_states(const Spectrum& spectrum, const ProductSpace& space,
                                   const Eigen::VectorXd& bare);

struct ExactShifts {
  double resonator_pull = 0.0;  // [E(0,1) - E(0,0)] - w_r
  double qubit_shift = 0.0;     // [E(1,0) - E(0,0)] - w_10
};

ExactShifts exact_shifts(const QubitSpec& qubit, const ResonatorSpec& resonator, Interaction model);

/// Row-major CSV with a "# rows,cols" header line.
void write_matrix_csv(const Eigen::MatrixXd& matrix, std::ostream& out);

}  // namespace rabidisp
