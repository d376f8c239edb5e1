#include "rabidisp/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/numeric/odeint.hpp>

#include "rabidisp/dispersive.hpp"
#include "rabidisp/error.hpp"

namespace rabidisp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRateToGhz = 1e-3;
constexpr Complex kI{0.0, 1.0};

using Triplet = Eigen::Triplet<Complex>;

SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ca = 0; ca < a.outerSize(); ++ca) {
    for (SparseCMatrix::InnerIterator ia(a, ca); ia; ++ia) {
      for (int cb = 0; cb < b.outerSize(); ++cb) {
        for (SparseCMatrix::InnerIterator ib(b, cb); ib; ++ib) {
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
        }
      }
    }
  }
  SparseCMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseCMatrix identity(int n) {
  SparseCMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseCMatrix qubit_matrix(QubitOp op, int k, int n) {
  SparseCMatrix q(n, n);
  switch (op) {
    case QubitOp::Identity: return identity(n);
    case QubitOp::Lower: q.insert(k, k + 1) = 1.0; break;
    case QubitOp::Raise: q.insert(k + 1, k) = 1.0; break;
    case QubitOp::Project: q.insert(k, k) = 1.0; break;
  }
  return q;
}

SparseCMatrix photon_matrix(PhotonOp op, int m) {
  SparseCMatrix p(m, m);
  switch (op) {
    case PhotonOp::None: return identity(m);
    case PhotonOp::Annihilate:
      for (int n = 1; n < m; ++n) p.insert(n - 1, n) = std::sqrt(double(n));
      break;
    case PhotonOp::Create:
      for (int n = 0; n + 1 < m; ++n) p.insert(n + 1, n) = std::sqrt(n + 1.0);
      break;
  }
  return p;
}

CMatrix resymmetrized(const CMatrix& rho) { return 0.5 * (rho + rho.adjoint()); }

}  // namespace

LindbladGenerator::LindbladGenerator(const CMatrix& hamiltonian_ghz, std::vector<Jump> jumps, ProductSpace space)
    : space_(space), hamiltonian_(hamiltonian_ghz), jumps_(std::move(jumps)) {
  const int d = space_.dim();
  if (hamiltonian_.rows() != d || hamiltonian_.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "Hamiltonian does not match the product space");
  }
  for (const auto& j : jumps_) {
    if (j.op.rows() != d || j.op.cols() != d) throw Error(ErrorCode::DimensionMismatch, "jump operator dimension");
    if (!(j.rate_mhz >= 0.0)) throw Error(ErrorCode::NegativeRate, "dissipator rate must be >= 0");
  }
  const SparseCMatrix id = identity(d);
  const SparseCMatrix h = hamiltonian_.sparseView();
  const SparseCMatrix ht = h.transpose();
  // vec(A rho B) = (B^T kron A) vec(rho)
  SparseCMatrix l = (kTwoPi * -kI) * (kron(id, h) - kron(ht, id));
  for (const auto& j : jumps_) {
    if (j.rate_mhz == 0.0) continue;
    const SparseCMatrix ndag_n = SparseCMatrix(j.op.adjoint()) * j.op;
    const SparseCMatrix ndag_n_t = ndag_n.transpose();
    const SparseCMatrix d_term = kron(SparseCMatrix(j.op.conjugate()), j.op) -
                                 0.5 * kron(id, ndag_n) - 0.5 * kron(ndag_n_t, id);
    l += (kTwoPi * kRateToGhz * j.rate_mhz) * d_term;
  }
  l.makeCompressed();
  super_ = std::move(l);
}

CMatrix LindbladGenerator::apply(const CMatrix& rho) const {
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
  const Eigen::VectorXcd out = super_ * v;
  return Eigen::Map<const CMatrix>(out.data(), rho.rows(), rho.cols());
}

SparseCMatrix jump_matrix(const JumpOperator& op, const ProductSpace& space) {
  if (op.qubit != QubitOp::Identity) {
    const int top = op.qubit == QubitOp::Project ? op.level : op.level + 1;
    if (op.level < 0 || top >= space.qubit_dim) throw Error(ErrorCode::DimensionMismatch, "qubit level out of range");
  }
  return kron(qubit_matrix(op.qubit, op.level, space.qubit_dim), photon_matrix(op.photon, space.fock_dim));
}

CMatrix apply_dissipator(const CMatrix& op, const CMatrix& rho) {
  const CMatrix ndag_n = op.adjoint() * op;
  return op * rho * op.adjoint() - 0.5 * (ndag_n * rho + rho * ndag_n);
}

LindbladGenerator assemble(const SystemSpec& spec, const RateTable& table, GeneratorMode mode,
                           const std::vector<DissipatorTerm>& extra) {
  const ProductSpace space{spec.qubit.num_levels(), spec.resonator.fock_truncation};
  std::vector<Jump> jumps;
  auto add = [&](const std::vector<DissipatorTerm>& terms) {
    for (const auto& t : terms) {
      if (t.rate < 0.0) throw Error(ErrorCode::NegativeRate, t.op.label());
      if (t.rate > 0.0) jumps.push_back({jump_matrix(t.op, space), t.rate});
    }
  };
  add(table.second_order);

  CMatrix h;
  if (mode == GeneratorMode::DressedAnalytic) {
    const auto h2 = h2_coefficients(spec.qubit, spec.omega_r(), table.model);
    const Eigen::VectorXd bare = bare_energies(spec.qubit, spec.resonator);
    h = CMatrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
      const auto& c = h2[static_cast<std::size_t>(space.level_of(i))];
      h(i, i) = bare(i) + c.photon * space.photons_of(i) + c.level;
    }
    add(table.fourth_order);
    add(extra);
  } else {
    h = build_hamiltonian(spec.qubit, spec.resonator, table.model).cast<Complex>();
  }
  return LindbladGenerator(h, std::move(jumps), space);
}

Trajectory evolve(const LindbladGenerator& generator, const CMatrix& rho0, const EvolveOptions& options) {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<Complex>;
  const int d = generator.dim();
  if (rho0.rows() != d || rho0.cols() != d) throw Error(ErrorCode::DimensionMismatch, "initial state dimension");
  if (!(options.t_max_ns >= 0.0) || !(options.dt_out_ns > 0.0) || !(options.tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "t_max >= 0, dt_out > 0 and tolerance > 0 required");
  }
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10 || std::abs(rho0.trace() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "initial state must be Hermitian with unit trace");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho0, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) throw Error(ErrorCode::InvalidArgument, "initial state is not PSD");

  const SparseCMatrix& l = generator.superoperator();
  auto rhs = [&l](const State& x, State& dxdt, double) {
    Eigen::Map<Eigen::VectorXcd>(dxdt.data(), static_cast<Eigen::Index>(dxdt.size())) =
        l * Eigen::Map<const Eigen::VectorXcd>(x.data(), static_cast<Eigen::Index>(x.size()));
  };
  auto stepper = odeint::make_controlled(options.tolerance, options.tolerance, odeint::runge_kutta_dopri5<State>());

  State x(rho0.data(), rho0.data() + rho0.size());
  auto as_matrix = [d](const State& s) { return Eigen::Map<const CMatrix>(s.data(), d, d); };

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  const auto steps = static_cast<long>(std::ceil(options.t_max_ns / options.dt_out_ns - 1e-9));
  double t = 0.0;
  double dt = std::min(options.dt_out_ns, 1e-3);
  for (long i = 1; i <= steps; ++i) {
    const double target = std::min(options.t_max_ns, static_cast<double>(i) * options.dt_out_ns);
    while (t < target) {
      double step = std::min(dt, target - t);
      const double t_before = t;
      if (stepper.try_step(rhs, x, t, step) == odeint::success) {
        const CMatrix sym = resymmetrized(as_matrix(x));
        std::copy(sym.data(), sym.data() + sym.size(), x.begin());
        stepper.reset();
        dt = step;
        if (target - t < 1e-12 * std::max(1.0, target)) t = target;
      } else {
        dt = step;
      }
      if (t == t_before && dt < 1e-15 * std::max(1.0, t)) {
        throw Error(ErrorCode::StepUnderflow, "step size underflow at t = " + std::to_string(t) + " ns");
      }
    }
    traj.times.push_back(target);
    traj.states.emplace_back(as_matrix(x));
  }
  return traj;
}

CMatrix steady_state(const LindbladGenerator& generator) {
  const int d = generator.dim();
  const int d2 = d * d;
  const SparseCMatrix& l = generator.superoperator();
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d2);
  rhs(0) = 1.0;
  Eigen::VectorXcd x;

  // Row 0 (the rho_00 equation) is replaced by the trace condition.
  if (d2 <= 4096) {
    CMatrix dense = CMatrix(l);
    Eigen::FullPivLU<CMatrix> kernel(dense);
    kernel.setThreshold(1e-10);
    if (d2 - kernel.rank() != 1) {
      throw Error(ErrorCode::DegenerateNullSpace,
                  "generator kernel has dimension " + std::to_string(d2 - kernel.rank()));
    }
    dense.row(0).setZero();
    for (int i = 0; i < d; ++i) dense(0, i * d + i) = 1.0;
    x = dense.fullPivLu().solve(rhs);
  } else {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(l.nonZeros() + d));
    for (int c = 0; c < l.outerSize(); ++c) {
      for (SparseCMatrix::InnerIterator it(l, c); it; ++it) {
        if (it.row() != 0) t.emplace_back(it.row(), it.col(), it.value());
      }
    }
    for (int i = 0; i < d; ++i) t.emplace_back(0, i * d + i, 1.0);
    SparseCMatrix a(d2, d2);
    a.setFromTriplets(t.begin(), t.end());
    a.makeCompressed();
    Eigen::SparseLU<SparseCMatrix> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw Error(ErrorCode::DegenerateNullSpace, "sparse LU failed");
    x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw Error(ErrorCode::DegenerateNullSpace, "sparse solve failed");
  }
  const double scale = std::max(1.0, l.coeffs().cwiseAbs().maxCoeff());
  if ((l * x).cwiseAbs().maxCoeff() > 1e-10 * scale || !x.allFinite()) {
    throw Error(ErrorCode::DegenerateNullSpace, "steady-state residual too large");
  }
  return resymmetrized(Eigen::Map<const CMatrix>(x.data(), d, d));
}

CMatrix partial_trace_resonator(const CMatrix& rho, const ProductSpace& space) {
  if (rho.rows() != space.dim() || rho.cols() != space.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix does not match the product space");
  }
  CMatrix out = CMatrix::Zero(space.qubit_dim, space.qubit_dim);
  for (int k = 0; k < space.qubit_dim; ++k) {
    for (int l = 0; l < space.qubit_dim; ++l) {
      for (int n = 0; n < space.fock_dim; ++n) out(k, l) += rho(space.index(k, n), space.index(l, n));
    }
  }
  return out;
}

CMatrix ground_state(const ProductSpace& space) { return fock_state(space, 0, 0); }

CMatrix fock_state(const ProductSpace& space, int level, int photons) {
  if (level < 0 || level >= space.qubit_dim || photons < 0 || photons >= space.fock_dim) {
    throw Error(ErrorCode::DimensionMismatch, "Fock state outside the product space");
  }
  CMatrix rho = CMatrix::Zero(space.dim(), space.dim());
  rho(space.index(level, photons), space.index(level, photons)) = 1.0;
  return rho;
}

CMatrix thermal_state(const SystemSpec& spec, const ProductSpace& space, double temperature) {
  if (temperature < 0.0) throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0");
  if (temperature == 0.0) return ground_state(space);
  ResonatorSpec r = spec.resonator;
  r.fock_truncation = space.fock_dim;
  const Eigen::VectorXd e = bare_energies(spec.qubit, r);
  const double e0 = e.minCoeff();
  Eigen::VectorXd w = (-(e.array() - e0) / temperature).exp();
  w /= w.sum();
  return w.cast<Complex>().asDiagonal();
}

DisplacementCheck verify_displacement_identity(Complex alpha, int k, const ProductSpace& space) {
  const int n_q = space.qubit_dim;
  const int m = space.fock_dim;
  if (k < 0 || k + 1 >= n_q) throw Error(ErrorCode::DimensionMismatch, "transition index out of range");
  if (std::norm(alpha) > m / 4.0) {
    throw Error(ErrorCode::TruncationTooSmall, "|alpha|^2 must not exceed fock_dim / 4");
  }
  // The operators live in a padded working space so that the truncated a^dag
  // does not clip the top Fock state of the test space; the test states
  // themselves only occupy the first fock_dim states.
  const int w = 2 * m;
  const ProductSpace work{n_q, w};
  const CMatrix a = CMatrix(photon_matrix(PhotonOp::Annihilate, w));
  const CMatrix adag = a.adjoint();
  // exp(alpha a^dag - alpha* a) = exp(-i G) with Hermitian G = i (alpha a^dag - alpha* a)
  const CMatrix g = kI * (alpha * adag - std::conj(alpha) * a);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(g);
  const Eigen::VectorXcd phases = (-kI * eig.eigenvalues().cast<Complex>()).array().exp();
  const CMatrix disp_r = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();

  const CMatrix sigma = CMatrix(qubit_matrix(QubitOp::Lower, k, n_q));
  const CMatrix id_q = CMatrix::Identity(n_q, n_q);
  const CMatrix id_r = CMatrix::Identity(w, w);
  auto kron_dense = [](const CMatrix& x, const CMatrix& y) {
    CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
    return out;
  };
  const CMatrix disp = kron_dense(id_q, disp_r);
  const CMatrix bare_op = kron_dense(sigma, adag);
  const CMatrix displaced_op = disp.adjoint() * bare_op * disp;
  const CMatrix qubit_op = kron_dense(sigma, id_r);
  const double n_alpha = std::norm(alpha);

  std::vector<CMatrix> qubit_states;
  CMatrix excited = CMatrix::Zero(n_q, n_q);
  excited(k + 1, k + 1) = 1.0;
  qubit_states.push_back(excited);
  CMatrix lower = CMatrix::Zero(n_q, n_q);
  lower(k, k) = 1.0;
  qubit_states.push_back(lower);
  std::mt19937 rng(20240917u);
  std::normal_distribution<double> normal;
  CMatrix mix(n_q, n_q);
  for (Eigen::Index i = 0; i < mix.size(); ++i) mix(i) = Complex(normal(rng), normal(rng));
  CMatrix random_state = mix * mix.adjoint();
  qubit_states.push_back(random_state / random_state.trace());

  DisplacementCheck out;
  for (double nbar : {0.0, 0.05, 0.2}) {
    CMatrix thermal = CMatrix::Zero(w, w);
    const double ratio = nbar / (1.0 + nbar);
    double norm = 0.0;
    for (int n = 0; n < m; ++n) norm += std::pow(ratio, n);
    for (int n = 0; n < m; ++n) thermal(n, n) = std::pow(ratio, n) / norm;
    for (const auto& rq : qubit_states) {
      const CMatrix rho = kron_dense(rq, thermal);
      const CMatrix lhs = apply_dissipator(displaced_op, rho);
      const CMatrix bare_part = apply_dissipator(bare_op, rho);
      const CMatrix rhs = bare_part + n_alpha * apply_dissipator(qubit_op, rho);
      out.deviation = std::max(out.deviation, partial_trace_resonator(lhs - rhs, work).cwiseAbs().maxCoeff());
    }
  }
  const CMatrix probe = kron_dense(excited, CMatrix(fock_state({1, w}, 0, 0)));
  const CMatrix remainder = apply_dissipator(displaced_op, probe) - apply_dissipator(bare_op, probe);
  out.effective_rate = -partial_trace_resonator(remainder, work)(k + 1, k + 1).real();
  return out;
}

}  // namespace rabidisp
