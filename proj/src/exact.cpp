#include "rabidisp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <vector>

#include "rabidisp/csv.hpp"
#include "rabidisp/error.hpp"

namespace rabidisp {

Eigen::VectorXd bare_energies(const QubitSpec& qubit, const ResonatorSpec& resonator) {
  const ProductSpace space{qubit.num_levels(), resonator.fock_truncation};
  Eigen::VectorXd e(space.dim());
  for (int k = 0; k < space.qubit_dim; ++k) {
    for (int n = 0; n < space.fock_dim; ++n) {
      e(space.index(k, n)) = qubit.level_energies[static_cast<std::size_t>(k)] + n * resonator.omega_r;
    }
  }
  return e;
}

Eigen::MatrixXd build_hamiltonian(const QubitSpec& qubit, const ResonatorSpec& resonator, Interaction model,
                                  int dimension_cap) {
  const ProductSpace space{qubit.num_levels(), resonator.fock_truncation};
  if (space.qubit_dim < 1 || space.fock_dim < 1) throw Error(ErrorCode::InvalidArgument, "empty product space");
  if (space.dim() > dimension_cap) {
    throw Error(ErrorCode::DimensionOverflow,
                std::to_string(space.dim()) + " > cap " + std::to_string(dimension_cap));
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(space.dim(), space.dim());
  h.diagonal() = bare_energies(qubit, resonator);
  for (int k = 0; k + 1 < space.qubit_dim; ++k) {
    const double g = qubit.coupling(k);
    for (int n = 0; n < space.fock_dim; ++n) {
      const int upper = space.index(k + 1, n);
      // sigma_{k,k+1} a^dag : |k+1,n> -> |k,n+1>
      if (n + 1 < space.fock_dim) h(space.index(k, n + 1), upper) = g * std::sqrt(n + 1.0);
      // sigma_{k,k+1} a : |k+1,n> -> |k,n-1>
      if (model == Interaction::Rabi && n >= 1) h(space.index(k, n - 1), upper) = g * std::sqrt(double(n));
    }
  }
  for (int r = 0; r < space.dim(); ++r) {
    for (int c = r + 1; c < space.dim(); ++c) h(c, r) = h(r, c);
  }
  return h;
}

Spectrum diagonalize(const Eigen::MatrixXd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  const Eigen::Index n = hamiltonian.rows();
  Eigen::MatrixXd off = hamiltonian;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() == 0.0) {
    // Already diagonal: keep the entries exact instead of going through the
    // solver's internal rescaling.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return hamiltonian(i, i) < hamiltonian(j, j); });
    Spectrum s{Eigen::VectorXd(n), Eigen::MatrixXd::Zero(n, n)};
    for (Eigen::Index c = 0; c < n; ++c) {
      s.eigenvalues(c) = hamiltonian(order[static_cast<std::size_t>(c)], order[static_cast<std::size_t>(c)]);
      s.eigenvectors(order[static_cast<std::size_t>(c)], c) = 1.0;
    }
    return s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

int DressedLabels::at(int k, int n) const {
  const int i = space.index(k, n);
  if (eigen_index[static_cast<std::size_t>(i)] < 0) {
    throw Error(ErrorCode::AmbiguousLabeling, "state (" + std::to_string(k) + "," + std::to_string(n) +
                                                  ") best overlap " +
                                                  std::to_string(overlap[static_cast<std::size_t>(i)]));
  }
  return eigen_index[static_cast<std::size_t>(i)];
}

DressedLabels label_dressed_states(const Spectrum& spectrum, const ProductSpace& space, const Eigen::VectorXd& bare) {
  const int d = space.dim();
  if (spectrum.eigenvectors.rows() != d || bare.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum does not match the product space");
  }
  DressedLabels labels{space, std::vector<int>(static_cast<std::size_t>(d), -1),
                       std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return bare(a) < bare(b); });
  std::vector<bool> claimed(static_cast<std::size_t>(d), false);
  for (int i : order) {
    int best = -1;
    double best_overlap = -1.0;
    for (int j = 0; j < d; ++j) {
      if (claimed[static_cast<std::size_t>(j)]) continue;
      const double o = spectrum.eigenvectors(i, j) * spectrum.eigenvectors(i, j);
      if (o > best_overlap) {
        best_overlap = o;
        best = j;
      }
    }
    labels.overlap[static_cast<std::size_t>(i)] = best_overlap;
    // An even split between two eigenvectors (overlap 1/2) is ambiguous.
    if (best >= 0 && best_overlap > kLabelThreshold + 1e-9) {
      labels.eigen_index[static_cast<std::size_t>(i)] = best;
      claimed[static_cast<std::size_t>(best)] = true;
    }
  }
  return labels;
}

ExactShifts exact_shifts(const QubitSpec& qubit, const ResonatorSpec& resonator, Interaction model) {
  if (qubit.num_levels() < 2 || resonator.fock_truncation < 2) {
    throw Error(ErrorCode::InvalidArgument, "exact shifts need at least 2 qubit levels and 2 Fock states");
  }
  const ProductSpace space{qubit.num_levels(), resonator.fock_truncation};
  const Spectrum spectrum = diagonalize(build_hamiltonian(qubit, resonator, model));
  const DressedLabels labels = label_dressed_states(spectrum, space, bare_energies(qubit, resonator));
  const double e00 = spectrum.eigenvalues(labels.at(0, 0));
  const double e01 = spectrum.eigenvalues(labels.at(0, 1));
  const double e10 = spectrum.eigenvalues(labels.at(1, 0));
  return {e01 - e00 - resonator.omega_r, e10 - e00 - qubit.splitting(0)};
}

void write_matrix_csv(const Eigen::MatrixXd& m, std::ostream& out) {
  out << "# " << m.rows() << "," << m.cols() << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << format_double(m(r, c));
    }
    out << "\n";
  }
}

}  // namespace rabidisp
