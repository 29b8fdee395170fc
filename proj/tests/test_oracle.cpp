#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ambiq/conventions.hpp"
#include "ambiq/errors.hpp"
#include "ambiq/oracle.hpp"

using namespace ambiq;
using namespace ambiq::conventions;

namespace {

const PhysicalConstants kUnit{1.0};

Grid1D test_grid() { return make_centered_grid(128, 0.15); }

WaveFunction packet(double x, double k, double delta, PhysicalConstants c = kUnit) {
  return gaussian_wavefunction(test_grid(), {x, k, delta}, c);
}

OperatorMatrix mat_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  return {a.grid, CMatrix(a.entries * b.entries), a.constants};
}

}  // namespace

TEST_CASE("canonical pair matrices") {
  auto [q, p] = operator_matrices(test_grid(), kUnit);
  CHECK(max_abs(q.entries - CMatrix(q.entries.adjoint())) < 1e-12);
  CHECK(max_abs(p.entries - CMatrix(p.entries.adjoint())) < 1e-12);

  auto psi = packet(1.0, 2.0, 1.0);
  CHECK(std::abs(state_expectation(psi, q) - Complex(1.0)) < 1e-8);
  auto p2 = mat_product(p, p);
  CHECK(std::abs(state_expectation(psi, p2) - Complex(4.0 + 0.5)) < 1e-6);

  auto qp = mat_product(q, p);
  auto pq = mat_product(p, q);
  OperatorMatrix comm{q.grid, CMatrix(qp.entries - pq.entries), kUnit};
  CHECK(std::abs(state_expectation(psi, comm) - Complex(0.0, 1.0)) < 1e-6);
}

TEST_CASE("displacement matrix basics") {
  auto grid = test_grid();
  auto d0 = displacement_matrix_grid(grid, 0.0, 0.0, kUnit);
  CHECK(max_abs(d0.entries - CMatrix::Identity(grid.count, grid.count)) < 1e-13);

  auto d = displacement_matrix_grid(grid, 0.8, -0.6, kUnit);
  CHECK(unitarity_error(d) < 1e-10);

  // Both CBH orderings agree on localized states:
  // exp(i eta q) exp(i xi p) exp(i eta xi / 2) = symmetric form.
  const double eta = 0.8, xi = -0.6;
  auto left = mat_product(displacement_matrix_grid(grid, eta, 0.0, kUnit),
                          displacement_matrix_grid(grid, 0.0, xi, kUnit));
  auto psi = packet(0.3, -0.4, 1.0);
  const Complex ordered =
      state_expectation(psi, left) * std::polar(1.0, eta * xi / 2.0);
  CHECK(std::abs(ordered - state_expectation(psi, d)) < 1e-9);
}

TEST_CASE("displacement expectation reproduces the Gaussian characteristic value") {
  auto psi = packet(0.0, 0.0, 1.0);
  auto d = displacement_matrix_grid(psi.grid, 1.0, 1.0, kUnit);
  const Complex val = displacement_normalization(kUnit) * state_expectation(psi, d);
  CHECK(std::abs(val - Complex(std::exp(-0.5) / std::sqrt(2.0 * kPi))) < 1e-9);
}

TEST_CASE("composition rule carries the antisymmetric phase") {
  auto psi = packet(0.0, 0.0, 1.0);
  const double e1 = 0.7, x1 = 0.4, e2 = -0.3, x2 = 0.9;
  auto d1 = displacement_matrix_grid(psi.grid, e1, x1, kUnit);
  auto d2 = displacement_matrix_grid(psi.grid, e2, x2, kUnit);
  auto d12 = displacement_matrix_grid(psi.grid, e1 + e2, x1 + x2, kUnit);
  const Complex lhs = state_expectation(psi, mat_product(d1, d2));
  const Complex rhs =
      std::polar(1.0, -(e1 * x2 - e2 * x1) / 2.0) * state_expectation(psi, d12);
  CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("conjugation shifts the canonical pair") {
  auto grid = test_grid();
  auto [q, p] = operator_matrices(grid, kUnit);
  const double eta = 0.5, xi = 0.9;
  auto d = displacement_matrix_grid(grid, eta, xi, kUnit);
  OperatorMatrix dq{grid, CMatrix(d.entries * q.entries * d.entries.adjoint()), kUnit};
  OperatorMatrix dp{grid, CMatrix(d.entries * p.entries * d.entries.adjoint()), kUnit};
  auto psi = packet(-0.2, 0.6, 1.0);
  const Complex q0 = state_expectation(psi, q);
  const Complex p0 = state_expectation(psi, p);
  // D q D' = q + xi;  D p D' = p - eta.
  CHECK(std::abs(state_expectation(psi, dq) - (q0 + xi)) < 1e-7);
  CHECK(std::abs(state_expectation(psi, dp) - (p0 - eta)) < 1e-7);
}

TEST_CASE("lattice displacements are trace-orthogonal") {
  auto grid = test_grid();
  const Grid1D k = conjugate_grid(grid, kUnit);
  auto da = displacement_matrix_grid(grid, 2.0 * k.step, 3.0 * grid.step, kUnit);
  auto db = displacement_matrix_grid(grid, -1.0 * k.step, 5.0 * grid.step, kUnit);
  OperatorMatrix da_adj{grid, CMatrix(da.entries.adjoint()), kUnit};
  OperatorMatrix db_adj{grid, CMatrix(db.entries.adjoint()), kUnit};
  const double norm = 1.0 / (2.0 * kPi);
  CHECK(std::abs(norm * trace_direct(da, da_adj) -
                 Complex(1.0 / (k.step * grid.step))) < 1e-9);
  CHECK(std::abs(norm * trace_direct(da, db_adj)) < 1e-6);
}

TEST_CASE("direct traces against a density operator") {
  auto psi = packet(1.0, 0.0, 1.0);
  auto rho = density_from_wavefunction(psi);
  auto rho_op = density_operator(rho);
  auto grid = psi.grid;
  CHECK(std::abs(trace_direct(rho_op, identity_operator(grid, kUnit)) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(trace_direct(rho_op, rho_op) - Complex(purity(rho))) < 1e-12);
  auto [q, p] = operator_matrices(grid, kUnit);
  CHECK(std::abs(trace_direct(rho_op, q) - Complex(1.0)) < 1e-8);
}

TEST_CASE("exact evolution: identity at t=0 and free-particle drift") {
  auto psi = packet(-0.5, 0.8, 1.0);
  auto rho = density_from_wavefunction(psi);
  auto [q, p] = operator_matrices(psi.grid, kUnit);
  const double mass = 2.0;
  OperatorMatrix h{psi.grid, CMatrix(p.entries * p.entries / (2.0 * mass)), kUnit};

  auto same = evolve_density_exact(rho, h, 0.0);
  CHECK(max_abs(same.entries - rho.entries) < 1e-12);

  const double t = 0.6;
  auto rho_t = evolve_density_exact(rho, h, t);
  CHECK(std::abs(rho_t.trace() - Complex(1.0)) < 1e-9);
  CHECK(purity(rho_t) == doctest::Approx(1.0).epsilon(1e-9));
  const Complex mean_q = trace_direct(density_operator(rho_t), q);
  CHECK(std::abs(mean_q - Complex(-0.5 + 0.8 * t / mass)) < 1e-6);
}

TEST_CASE("exact evolution: eigenstate mixtures are stationary") {
  auto grid = make_centered_grid(64, 0.25);
  auto h = gaussian_well_hamiltonian(grid, 1.0, 0.8, 1.5, kUnit);
  CHECK(max_abs(h.entries - CMatrix(h.entries.adjoint())) < 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h.entries);
  DensityMatrix rho{grid, CMatrix::Zero(64, 64), kUnit};
  const CVector v0 = eig.eigenvectors().col(0);
  const CVector v1 = eig.eigenvectors().col(1);
  rho.entries = (0.75 * (v0 * v0.adjoint()) + 0.25 * (v1 * v1.adjoint())) / grid.step;
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
  auto rho_t = evolve_density_exact(rho, h, 0.7);
  CHECK(max_abs(rho_t.entries - rho.entries) < 1e-9);
}

TEST_CASE("non-Hermitian Hamiltonian is rejected") {
  auto grid = make_centered_grid(16, 0.5);
  auto psi = gaussian_wavefunction(grid, {0.0, 0.0, 0.3}, kUnit);
  auto rho = density_from_wavefunction(psi);
  OperatorMatrix bad{grid, CMatrix::Zero(16, 16), kUnit};
  bad.entries(0, 1) = 1.0;
  CHECK_THROWS_AS(evolve_density_exact(rho, bad, 0.1), InvalidArgument);
}

TEST_CASE("phase-space point operator at the origin is the scaled parity") {
  auto grid = test_grid();
  const int n = grid.count;
  auto w = wigner_seed_matrix(grid, n / 2, n / 2, kUnit);
  auto r = reflection_operator(grid, kUnit);
  CHECK(max_abs(w.entries - CMatrix(displaced_parity_prefactor(kUnit) * r.entries)) < 1e-12);

  auto psi = packet(0.0, 0.0, 1.0);
  auto rho_op = density_operator(density_from_wavefunction(psi));
  CHECK(std::abs(trace_direct(rho_op, w) - Complex(1.0 / kPi)) < 1e-9);
}

TEST_CASE("phase-space point operator matches the Gaussian closed form off origin") {
  auto grid = test_grid();
  const int n = grid.count;
  auto psi = packet(0.2, 0.3, 1.0);
  auto rho_op = density_operator(density_from_wavefunction(psi));
  const Grid1D q_axis = make_fourier_grid(n, grid.step);
  const Grid1D p_axis = conjugate_grid(grid, kUnit);
  for (int dq = -2; dq <= 2; dq += 2)
    for (int dp = -2; dp <= 2; dp += 2) {
      const int qi = n / 2 + dq, pi = n / 2 + dp;
      auto w = wigner_seed_matrix(grid, qi, pi, kUnit);
      const double qv = q_axis.value(qi), pv = p_axis.value(pi);
      const double expected =
          std::exp(-(qv - 0.2) * (qv - 0.2) - (pv - 0.3) * (pv - 0.3)) / kPi;
      CHECK(std::abs(trace_direct(rho_op, w) - Complex(expected)) < 1e-6);
    }
}

TEST_CASE("quadrature and parity seed routes agree on the shared support") {
  auto grid = make_centered_grid(64, 0.2);
  auto quad = wigner_seed_quadrature(grid, 37, 30, kUnit);
  auto par = wigner_seed_parity(grid, 37, 30, kUnit);
  double worst = 0.0;
  for (int j = 0; j < 64; ++j)
    for (int l = 0; l < 64; ++l)
      if (std::abs(quad.entries(j, l)) > 1e-12)
        worst = std::max(worst, std::abs(quad.entries(j, l) - par.entries(j, l)));
  CHECK(worst < 1e-12);
}

TEST_CASE("momentum representation") {
  const PhysicalConstants c{0.7};
  auto psi = packet(0.4, 0.9, 1.2, c);
  auto tilde = momentum_representation(psi);
  const Grid1D k = conjugate_grid(psi.grid, c);
  double total = 0.0, mean = 0.0;
  for (int a = 0; a < k.count; ++a) {
    const double w = std::norm(tilde[a]) * k.step;
    total += w;
    mean += k.value(a) * w;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mean == doctest::Approx(0.9).epsilon(1e-8));
  // Peak density |psi~(k)|^2 = sqrt(delta/pi)/hbar at k = mean momentum.
  const int peak = k.index_of(0.9, 0.5 * k.step + 1e-12);
  CHECK(std::abs(std::norm(tilde[peak]) -
                 std::sqrt(1.2 / kPi) / 0.7 *
                     std::exp(-(k.value(peak) - 0.9) * (k.value(peak) - 0.9) * 1.2 / 0.49)) <
        1e-6);
}
