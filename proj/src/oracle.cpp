#include "ambiq/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ambiq/conventions.hpp"
#include "ambiq/errors.hpp"
#include "ambiq/fourier.hpp"

namespace ambiq {
using conventions::displaced_parity_prefactor;
using conventions::seed_quadrature_prefactor;
}

namespace ambiq {

void OperatorMatrix::validate() const {
  grid.validate();
  constants.validate();
  if (entries.rows() != grid.count || entries.cols() != grid.count)
    throw InvalidArgument("operator matrix shape mismatch");
}

std::pair<OperatorMatrix, OperatorMatrix> operator_matrices(const Grid1D& grid,
                                                            const PhysicalConstants& c) {
  grid.validate();
  if (grid.count < 8) throw InvalidArgument("operator matrices need at least 8 grid points");
  const int n = grid.count;
  OperatorMatrix q{grid, CMatrix::Zero(n, n), c};
  for (int j = 0; j < n; ++j) q.entries(j, j) = grid.value(j);
  const Grid1D k = conjugate_grid(grid, c);
  const CMatrix f = unitary_dft(grid, k, c);
  CMatrix diag = CMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) diag(a, a) = k.value(a);
  OperatorMatrix p{grid, CMatrix(f.adjoint() * diag * f), c};
  return {std::move(q), std::move(p)};
}

OperatorMatrix identity_operator(const Grid1D& grid, const PhysicalConstants& c) {
  grid.validate();
  return {grid, CMatrix::Identity(grid.count, grid.count), c};
}

OperatorMatrix reflection_operator(const Grid1D& grid, const PhysicalConstants& c) {
  grid.validate();
  const int n = grid.count;
  OperatorMatrix r{grid, CMatrix::Zero(n, n), c};
  for (int j = 0; j < n; ++j) {
    const int m = grid.reflect(j);
    if (m < 0 || m >= n) throw InvalidArgument("grid is not reflection-closed");
    r.entries(j, m) = 1.0;
  }
  return r;
}

OperatorMatrix displacement_matrix_grid(const Grid1D& grid, double eta, double xi,
                                        const PhysicalConstants& c) {
  grid.validate();
  c.validate();
  const int n = grid.count;
  if (std::abs(xi) > grid.max() - grid.min() + grid.step)
    throw InvalidArgument("displacement exceeds the grid extent");
  const Grid1D k = conjugate_grid(grid, c);
  const CMatrix f = unitary_dft(grid, k, c);
  CVector half_phase(n);
  for (int j = 0; j < n; ++j) half_phase[j] = std::polar(1.0, eta * grid.value(j) / (2.0 * c.hbar));
  CVector shift_phase(n);
  for (int a = 0; a < n; ++a) shift_phase[a] = std::polar(1.0, xi * k.value(a) / c.hbar);
  CMatrix shift = f.adjoint() * shift_phase.asDiagonal() * f;
  OperatorMatrix d{grid, CMatrix(half_phase.asDiagonal() * shift * half_phase.asDiagonal()), c};
  return d;
}

OperatorMatrix density_operator(const DensityMatrix& rho) {
  rho.validate();
  return {rho.grid, CMatrix(rho.grid.step * rho.entries), rho.constants};
}

Complex trace_direct(const OperatorMatrix& a, const OperatorMatrix& b) {
  a.validate();
  b.validate();
  if (!same_grid(a.grid, b.grid) || !same_constants(a.constants, b.constants))
    throw InvalidArgument("trace requires matching grids and constants");
  return (a.entries.array() * b.entries.transpose().array()).sum();
}

Complex state_expectation(const WaveFunction& psi, const OperatorMatrix& m) {
  psi.validate();
  m.validate();
  if (!same_grid(psi.grid, m.grid)) throw InvalidArgument("state and operator grids differ");
  return psi.grid.step * Complex(psi.samples.adjoint() * m.entries * psi.samples);
}

DensityMatrix evolve_density_exact(const DensityMatrix& rho, const OperatorMatrix& h, double t) {
  rho.validate();
  h.validate();
  if (!same_grid(rho.grid, h.grid) || !same_constants(rho.constants, h.constants))
    throw InvalidArgument("state and Hamiltonian grids differ");
  const double scale = 1.0 + max_abs(h.entries);
  if (max_abs(h.entries - CMatrix(h.entries.adjoint())) > 1e-10 * scale)
    throw InvalidArgument("Hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h.entries);
  if (eig.info() != Eigen::Success) throw NumericalInstability("eigendecomposition failed");
  const int n = rho.grid.count;
  CVector phases(n);
  for (int j = 0; j < n; ++j)
    phases[j] = std::polar(1.0, -eig.eigenvalues()[j] * t / rho.constants.hbar);
  const CMatrix u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  DensityMatrix out{rho.grid, CMatrix(u * rho.entries * u.adjoint()), rho.constants};
  return out;
}

namespace {

struct SeedAxes {
  Grid1D q_axis;
  Grid1D p_axis;
};

SeedAxes seed_axes(const Grid1D& grid, const PhysicalConstants& c) {
  return {make_fourier_grid(grid.count, grid.step), conjugate_grid(grid, c)};
}

void check_seed_point(const SeedAxes& axes, int q_idx, int p_idx) {
  if (q_idx < 0 || q_idx >= axes.q_axis.count || p_idx < 0 || p_idx >= axes.p_axis.count)
    throw InvalidArgument("phase-space index outside the grid");
}

}  // namespace

OperatorMatrix wigner_seed_quadrature(const Grid1D& grid, int q_idx, int p_idx,
                                      const PhysicalConstants& c) {
  grid.validate();
  c.validate();
  const auto axes = seed_axes(grid, c);
  check_seed_point(axes, q_idx, p_idx);
  const int n = grid.count;
  const double q = axes.q_axis.value(q_idx);
  const double p = axes.p_axis.value(p_idx);
  const double h_eta = axes.p_axis.step;
  const double pref = seed_quadrature_prefactor(c) * grid.step * h_eta;
  OperatorMatrix m{grid, CMatrix::Zero(n, n), c};
  // The displacement at lattice xi = sigma*step is an exact circular shift
  // dressed with diagonal half-phases, so each (eta, xi) term touches one
  // entry per row.  eta runs over a doubled band: the displacement is
  // anti-periodic in eta with period n*h_eta on this grid.
  for (int a = 0; a < 2 * n; ++a) {
    const double eta = (a - n) * h_eta;
    for (int s = 0; s < n; ++s) {
      const double xi = axes.q_axis.value(s);
      const int sigma = s - n / 2;
      const Complex col_phase = std::polar(pref, -xi * p / c.hbar);
      for (int j = 0; j < n; ++j) {
        const int l = ((j + sigma) % n + n) % n;
        const double center = 0.5 * (grid.value(j) + grid.value(l));
        m.entries(j, l) += col_phase * std::polar(1.0, eta * (center - q) / c.hbar);
      }
    }
  }
  return m;
}

OperatorMatrix wigner_seed_parity(const Grid1D& grid, int q_idx, int p_idx,
                                  const PhysicalConstants& c) {
  grid.validate();
  c.validate();
  const auto axes = seed_axes(grid, c);
  check_seed_point(axes, q_idx, p_idx);
  const double q = axes.q_axis.value(q_idx);
  const double p = axes.p_axis.value(p_idx);
  const OperatorMatrix d = displacement_matrix_grid(grid, p, -q, c);
  const OperatorMatrix r = reflection_operator(grid, c);
  OperatorMatrix w{grid,
                   CMatrix(displaced_parity_prefactor(c) *
                           (d.entries * r.entries * d.entries.adjoint())),
                   c};
  return w;
}

OperatorMatrix wigner_seed_matrix(const Grid1D& grid, int q_idx, int p_idx,
                                  const PhysicalConstants& c) {
  const OperatorMatrix quad = wigner_seed_quadrature(grid, q_idx, p_idx, c);
  OperatorMatrix par = wigner_seed_parity(grid, q_idx, p_idx, c);
  // Compare on the quadrature route's support (its single anti-diagonal).
  const int n = grid.count;
  const double scale = displaced_parity_prefactor(c);
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      const double quad_mag = std::abs(quad.entries(j, l));
      if (quad_mag > 1e-9 * scale)
        worst = std::max(worst, std::abs(quad.entries(j, l) - par.entries(j, l)));
    }
  if (worst > 1e-5 * scale)
    throw ConsistencyFailure("phase-space point operator routes disagree");
  return par;
}

OperatorMatrix gaussian_well_hamiltonian(const Grid1D& grid, double mass, double v0, double sigma,
                                         const PhysicalConstants& c) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  if (!(sigma > 0.0)) throw InvalidArgument("potential width must be positive");
  auto [q, p] = operator_matrices(grid, c);
  OperatorMatrix h{grid, CMatrix(p.entries * p.entries / (2.0 * mass)), c};
  for (int j = 0; j < grid.count; ++j) {
    const double x = grid.value(j);
    h.entries(j, j) += v0 * std::exp(-x * x / (2.0 * sigma * sigma));
  }
  return h;
}

CVector momentum_representation(const WaveFunction& psi) {
  psi.validate();
  const Grid1D k = conjugate_grid(psi.grid, psi.constants);
  const CMatrix f = unitary_dft(psi.grid, k, psi.constants);
  const double norm =
      psi.grid.step * std::sqrt(static_cast<double>(psi.grid.count)) /
      std::sqrt(2.0 * kPi * psi.constants.hbar);
  return norm * (f * psi.samples);
}

double unitarity_error(const OperatorMatrix& u) {
  u.validate();
  const int n = u.grid.count;
  return max_abs(CMatrix(u.entries * u.entries.adjoint()) - CMatrix::Identity(n, n));
}

ContinuumReport verify_continuum_identities(const Grid1D& grid, const PhysicalConstants& c) {
  grid.validate();
  ContinuumReport rep;
  rep.grid = grid;
  const Grid1D k = conjugate_grid(grid, c);

  // Packets and displacement scales sized off the grid so the checks stay
  // meaningful for any well-resolved axis: widths a tenth of the half-span
  // and centers within a sixteenth, keeping the boundary amplitude under
  // ~3e-10 of the peak; displacements stay well under a width.
  const double half = 0.5 * (grid.max() - grid.min());
  const double width = half / 10.0;
  const double delta = 2.0 * width * width;
  const double mom = 0.7 * c.hbar / width;
  std::vector<WaveFunction> packets;
  for (double x : {0.0, half / 16.0, -half / 16.0})
    for (double p0 : {0.0, mom}) packets.push_back(gaussian_wavefunction(grid, {x, p0, delta}, c));

  const double eta_scale = 0.6 * c.hbar / width;
  const double xi_scale = 0.6 * width;
  const double e1 = 0.7 * eta_scale, x1 = 0.4 * xi_scale;
  const double e2 = -0.3 * eta_scale, x2 = 0.9 * xi_scale;

  const OperatorMatrix d1 = displacement_matrix_grid(grid, e1, x1, c);
  const OperatorMatrix d2 = displacement_matrix_grid(grid, e2, x2, c);
  const OperatorMatrix d12 = displacement_matrix_grid(grid, e1 + e2, x1 + x2, c);
  const Complex comp_phase = std::polar(1.0, -(e1 * x2 - e2 * x1) / (2.0 * c.hbar));
  const OperatorMatrix prod{grid, CMatrix(d1.entries * d2.entries), c};
  for (const WaveFunction& psi : packets)
    rep.composition_error =
        std::max(rep.composition_error,
                 std::abs(state_expectation(psi, prod) -
                          comp_phase * state_expectation(psi, d12)));

  // Conjugation moves the canonical pair: q picks up +xi, p picks up -eta.
  auto [q, p] = operator_matrices(grid, c);
  const OperatorMatrix dq{grid, CMatrix(d1.entries * q.entries * d1.entries.adjoint()), c};
  const OperatorMatrix dp{grid, CMatrix(d1.entries * p.entries * d1.entries.adjoint()), c};
  for (const WaveFunction& psi : packets) {
    const Complex cq = state_expectation(psi, dq) - state_expectation(psi, q) - x1;
    const Complex cp = state_expectation(psi, dp) - state_expectation(psi, p) + e1;
    rep.conjugation_error = std::max({rep.conjugation_error, std::abs(cq), std::abs(cp)});
  }

  // Trace orthogonality at lattice-commensurate displacements: the pairing is
  // 1/(step_eta*step_xi) at coincidence and a discrete delta away from it.
  const OperatorMatrix da = displacement_matrix_grid(grid, 2.0 * k.step, 3.0 * grid.step, c);
  const OperatorMatrix db = displacement_matrix_grid(grid, -1.0 * k.step, 5.0 * grid.step, c);
  const OperatorMatrix da_adj{grid, CMatrix(da.entries.adjoint()), c};
  const OperatorMatrix db_adj{grid, CMatrix(db.entries.adjoint()), c};
  const double pair_norm = 1.0 / (2.0 * kPi * c.hbar);
  rep.orthogonality_error =
      std::max(std::abs(pair_norm * trace_direct(da, da_adj) - Complex(1.0 / (k.step * grid.step))),
               std::abs(pair_norm * trace_direct(da, db_adj)));

  rep.all_ok = rep.composition_ok() && rep.conjugation_ok() && rep.orthogonality_ok();
  return rep;
}

}  // namespace ambiq
