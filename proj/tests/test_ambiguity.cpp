#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ambiq/ambiguity.hpp"
#include "ambiq/conventions.hpp"
#include "ambiq/errors.hpp"
#include "ambiq/oracle.hpp"
#include "ambiq/states.hpp"

using namespace ambiq;

namespace {

const PhysicalConstants kUnit{};

double field_max_diff(const ComplexField& a, const ComplexField& b) {
  REQUIRE(same_phase_grid(a.grid, b.grid));
  return max_abs(a.values - b.values);
}

DensityMatrix cat_state(const Grid1D& grid, const PhysicalConstants& c) {
  return density_from_wavefunction(superposition_state(
      grid, {{-1.2, 0.8, 0.5}, {1.4, -0.3, 0.7}}, {{0.8, 0.0}, {0.55, 0.35}}, c));
}

}  // namespace

TEST_CASE("closed form matches pinned Gaussian values") {
  const auto a0 = gaussian_ambiguity_closed({0.0, 0.0, 1.0}, kUnit);
  CHECK(a0.value(0.0, 0.0).real() == doctest::Approx(0.3989423).epsilon(1e-6));
  CHECK(a0.value(0.0, 0.0).imag() == 0.0);
  CHECK(a0.value(1.0, 1.0).real() == doctest::Approx(0.2419707).epsilon(1e-6));

  const auto a1 = gaussian_ambiguity_closed({1.0, 2.0, 1.0}, kUnit);
  const Complex expect = std::polar(std::exp(-0.25) / std::sqrt(2.0 * kPi), 1.0);
  CHECK(std::abs(a1.value(1.0, 0.0) - expect) < 1e-12);

  const auto wide = gaussian_ambiguity_closed({0.0, 0.0, 2.0}, kUnit);
  for (double eta : {0.3, 1.0, 2.5})
    CHECK(std::abs(wide.value(eta, 0.0) -
                   Complex(std::exp(-eta * eta / 2.0) / std::sqrt(2.0 * kPi), 0.0)) < 1e-12);

  const auto shifted = gaussian_ambiguity_closed({3.0, 0.0, 1.0}, kUnit);
  for (double eta : {0.0, 0.7})
    for (double xi : {-0.4, 1.1})
      CHECK(std::abs(shifted.value(eta, xi)) ==
            doctest::Approx(std::abs(a0.value(eta, xi))).epsilon(1e-12));
}

TEST_CASE("closed-form origin derivatives match finite differences") {
  const PhysicalConstants c{0.8};
  const auto cf = gaussian_ambiguity_closed({0.7, -1.1, 1.3}, c);
  const double h = 0.02;
  // 7-point central first/second derivative weights and Richardson-free
  // higher orders via nested differencing of exact values.
  const auto d_eta = [&](int order, double xi) {
    std::vector<Complex> vals;
    for (int j = -4; j <= 4; ++j) vals.push_back(cf.value(j * h, xi));
    std::vector<Complex> cur = vals;
    for (int o = 0; o < order; ++o) {
      std::vector<Complex> next;
      for (std::size_t i = 1; i + 1 < cur.size(); ++i)
        next.push_back((cur[i + 1] - cur[i - 1]) / (2.0 * h));
      cur = next;
    }
    return cur[cur.size() / 2];
  };
  for (int a = 0; a <= 3; ++a)
    CHECK(std::abs(cf.derivative_at_origin(a, 0) - d_eta(a, 0.0)) < 2e-3);

  // Mixed derivative via differencing the closed form along xi of exact
  // eta-derivatives (recurrence applied at shifted centers is unavailable, so
  // compare a (1,1) derivative against a 2-D stencil).
  const auto v = [&](double eta, double xi) { return cf.value(eta, xi); };
  const Complex d11 = (v(h, h) - v(h, -h) - v(-h, h) + v(-h, -h)) / (4.0 * h * h);
  CHECK(std::abs(cf.derivative_at_origin(1, 1) - d11) < 2e-3);

  // Exact low orders.
  const double hbar = c.hbar;
  CHECK(std::abs(cf.derivative_at_origin(1, 0) -
                 Complex(0.0, 0.7 / hbar) * cf.value(0.0, 0.0)) < 1e-14);
  CHECK(std::abs(cf.derivative_at_origin(0, 1) -
                 Complex(0.0, -1.1 / hbar) * cf.value(0.0, 0.0)) < 1e-14);
}

TEST_CASE("transform matches closed form on the full grid") {
  const Grid1D grid = make_centered_grid(256, 0.1);
  const GaussianSpec spec{1.0, 2.0, 1.0};
  const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, spec, kUnit));
  const ComplexField a = ambiguity_from_density(rho);
  const ComplexField ref = gaussian_ambiguity_closed(spec, kUnit).sample(a.grid);
  CHECK(field_max_diff(a, ref) < 1e-6);
  CHECK(a.grid.axis1.origin() == 128);
  CHECK(a.grid.axis2.origin() == 128);
}

TEST_CASE("transform matches closed form off unit hbar and on odd counts") {
  const PhysicalConstants c{0.7};
  {
    const Grid1D grid = make_centered_grid(128, 0.15);
    const GaussianSpec spec{0.5, -0.4, 0.8};
    const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, spec, c));
    const ComplexField a = ambiguity_from_density(rho);
    CHECK(field_max_diff(a, gaussian_ambiguity_closed(spec, c).sample(a.grid)) < 1e-7);
  }
  {
    const Grid1D grid = make_centered_grid(255, 0.1);
    const GaussianSpec spec{-0.3, 0.9, 1.1};
    const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, spec, kUnit));
    const ComplexField a = ambiguity_from_density(rho);
    CHECK(field_max_diff(a, gaussian_ambiguity_closed(spec, kUnit).sample(a.grid)) < 1e-7);
  }
}

TEST_CASE("origin sample carries the trace for non-Gaussian states") {
  const Grid1D grid = make_centered_grid(128, 0.15);
  const double root = std::sqrt(2.0 * kPi * kUnit.hbar);

  const auto cat = cat_state(grid, kUnit);
  CHECK(std::abs(ambiguity_from_density(cat).at_origin() * root - Complex(1.0, 0.0)) < 1e-12);

  const auto psi1 = gaussian_wavefunction(grid, {0.4, 0.0, 1.0}, kUnit);
  const auto psi2 = gaussian_wavefunction(grid, {-0.8, 0.6, 0.6}, kUnit);
  const auto mix = mixed_state({psi1, psi2}, {0.3, 0.7});
  const ComplexField a = ambiguity_from_density(mix);
  CHECK(std::abs(a.at_origin() * root - Complex(1.0, 0.0)) < 1e-12);
  CHECK(hermitian_symmetry_error(a) < 1e-12);
}

TEST_CASE("transform agrees with direct displacement traces") {
  const Grid1D grid = make_centered_grid(80, 0.2);
  const auto rho = cat_state(grid, kUnit);
  const ComplexField a = ambiguity_from_density(rho);
  const auto rho_op = density_operator(rho);
  const double pref = conventions::ambiguity_prefactor(kUnit);
  for (int ai : {40, 38, 45, 49}) {
    for (int s : {40, 39, 42, 35}) {
      const double eta = a.grid.axis1.value(ai);
      const double xi = a.grid.axis2.value(s);
      const auto d = displacement_matrix_grid(grid, eta, xi, kUnit);
      const Complex direct = pref * trace_direct(rho_op, d);
      CHECK(std::abs(a.at(ai, s) - direct) < 1e-10);
    }
  }
}

TEST_CASE("reconstruction inverts the transform") {
  const Grid1D grid = make_centered_grid(128, 0.15);

  const auto pure = density_from_wavefunction(gaussian_wavefunction(grid, {0.3, -0.5, 1.0}, kUnit));
  CHECK(max_abs(reconstruct_density(ambiguity_from_density(pure)).entries - pure.entries) < 1e-8);

  const Grid1D fine = make_centered_grid(192, 0.06);
  const auto narrow = density_from_wavefunction(
      superposition_state(fine, {{-1.1, 0.0, 0.09}, {1.1, 0.0, 0.09}},
                          {{1.0, 0.0}, {1.0, 0.0}}, kUnit));
  CHECK(max_abs(reconstruct_density(ambiguity_from_density(narrow)).entries - narrow.entries) <
        1e-6);
}

TEST_CASE("reconstruction is exact on banded input") {
  const Grid1D grid = make_centered_grid(32, 0.3);
  CMatrix m = CMatrix::Zero(32, 32);
  unsigned state = 0x2545f491u;
  const auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 17;
    state ^= state << 5;
    return static_cast<double>(state % 10007) / 10007.0 - 0.5;
  };
  for (int j = 0; j < 32; ++j)
    for (int l = 0; l <= j; ++l) {
      if (j - l > 16) continue;
      const Complex v{next(), j == l ? 0.0 : next()};
      m(j, l) = v;
      m(l, j) = std::conj(v);
    }
  const DensityMatrix rho{grid, m, kUnit};
  CHECK(max_abs(reconstruct_density(ambiguity_from_density(rho)).entries - m) < 1e-12);
}

TEST_CASE("reconstruction keeps diagonal input diagonal") {
  const Grid1D grid = make_centered_grid(64, 0.2);
  CMatrix m = CMatrix::Zero(64, 64);
  for (int j = 0; j < 64; ++j) m(j, j) = 1.0 / (64.0 * 0.2);
  const DensityMatrix uniform{grid, m, kUnit};
  const auto back = reconstruct_density(ambiguity_from_density(uniform));
  CHECK(max_abs(back.entries - m) < 1e-8);
}

TEST_CASE("wigner values hit the closed form") {
  const Grid1D grid = make_centered_grid(256, 0.1);
  {
    const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, {0.0, 0.0, 1.0}, kUnit));
    CHECK(std::abs(wigner_value(rho, 0.0, 0.0) - Complex(1.0 / kPi, 0.0)) < 1e-10);
  }
  const GaussianSpec spec{1.0, 2.0, 1.0};
  const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, spec, kUnit));
  CHECK(std::abs(wigner_value(rho, 1.0, 2.0) - Complex(1.0 / kPi, 0.0)) < 1e-10);
  // Off-peak, off-lattice momentum.
  const auto wexact = [&](double q, double p) {
    return std::exp(-(q - spec.x) * (q - spec.x) / spec.delta -
                    (p - spec.k) * (p - spec.k) * spec.delta) /
           kPi;
  };
  for (double q : {0.75, 1.0, 1.3})
    for (double p : {1.1, 2.0, 2.77})
      CHECK(std::abs(wigner_value(rho, q, p) - Complex(wexact(q, p), 0.0)) < 1e-10);
}

TEST_CASE("wigner field is real, normalized, and matches the closed form") {
  const Grid1D grid = make_centered_grid(128, 0.15);
  const PhysicalConstants c{0.9};
  const GaussianSpec spec{0.45, -0.6, 0.8};
  const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, spec, c));
  const ComplexField w = wigner_from_density(rho);

  CHECK(w.kind == FieldKind::wigner);
  CHECK(hermitian_symmetry_error(w) < 1e-10);
  CHECK(std::abs(field_integral(w) - Complex(1.0, 0.0)) < 1e-10);

  double worst = 0.0;
  for (int j = 0; j < w.grid.axis1.count; ++j)
    for (int b = 0; b < w.grid.axis2.count; ++b) {
      const double q = w.grid.axis1.value(j);
      const double p = w.grid.axis2.value(b);
      const double exact = std::exp(-(q - spec.x) * (q - spec.x) / spec.delta -
                                    (p - spec.k) * (p - spec.k) * spec.delta / (c.hbar * c.hbar)) /
                           (kPi * c.hbar);
      worst = std::max(worst, std::abs(w.values(j, b) - Complex(exact, 0.0)));
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("fourier bridge agrees with the direct wigner route") {
  const Grid1D grid = make_centered_grid(128, 0.15);
  const auto rho = cat_state(grid, kUnit);
  const ComplexField a = ambiguity_from_density(rho);
  const ComplexField via_bridge = ambiguity_to_wigner(a);
  const ComplexField direct = wigner_from_density(rho);
  CHECK(field_max_diff(via_bridge, direct) < 1e-9);

  const ComplexField back = wigner_to_ambiguity(via_bridge);
  CHECK(field_max_diff(back, a) < 1e-12);
}

TEST_CASE("bridge inverts analytic wigner samples") {
  const PhaseGrid wg = make_wigner_grid(make_centered_grid(128, 0.15), kUnit);
  const GaussianSpec spec{0.0, 0.0, 1.0};
  ComplexField w{wg, CMatrix(128, 128), FieldKind::wigner, kUnit};
  for (int j = 0; j < 128; ++j)
    for (int b = 0; b < 128; ++b) {
      const double q = wg.axis1.value(j), p = wg.axis2.value(b);
      w.values(j, b) = std::exp(-q * q - p * p) / kPi;
    }
  const ComplexField a = wigner_to_ambiguity(w);
  const ComplexField ref = gaussian_ambiguity_closed(spec, kUnit).sample(a.grid);
  CHECK(field_max_diff(a, ref) < 1e-8);
}

TEST_CASE("eta marginal reproduces the position anti-diagonal") {
  const Grid1D grid = make_centered_grid(128, 0.15);
  const auto rho = cat_state(grid, kUnit);
  const ComplexField a = ambiguity_from_density(rho);
  const Marginal m = marginal(a, MarginalAxis::eta);
  REQUIRE(m.axis.count == 128);

  int checked = 0;
  for (int s = 0; s < m.axis.count; ++s) {
    const double xi = m.axis.value(s);
    const int j = grid.index_of(xi / 2.0);
    const int l = grid.index_of(-xi / 2.0);
    if (j < 0 || l < 0) continue;
    CHECK(std::abs(m.values(s) - rho.entries(j, l)) < 1e-11);
    ++checked;
  }
  CHECK(checked >= 63);
}

TEST_CASE("xi marginal reproduces the momentum anti-diagonal") {
  const Grid1D grid = make_centered_grid(128, 0.15);
  const GaussianSpec spec{0.6, 1.3, 0.9};
  const auto psi = gaussian_wavefunction(grid, spec, kUnit);
  const auto rho = density_from_wavefunction(psi);
  const CVector tilde = momentum_representation(psi);
  const Grid1D pgrid = conjugate_grid(grid, kUnit);

  const Marginal m = marginal(ambiguity_from_density(rho), MarginalAxis::xi);
  int checked = 0;
  for (int a = 0; a < m.axis.count; ++a) {
    const double eta = m.axis.value(a);
    const int jp = pgrid.index_of(eta / 2.0);
    const int jm = pgrid.index_of(-eta / 2.0);
    if (jp < 0 || jm < 0) continue;
    const Complex expect = tilde(jm) * std::conj(tilde(jp));
    CHECK(std::abs(m.values(a) - expect) < 1e-10);
    ++checked;
  }
  CHECK(checked >= 63);
}

TEST_CASE("invalid inputs are rejected") {
  const Grid1D grid = make_centered_grid(64, 0.2);
  const auto rho = density_from_wavefunction(gaussian_wavefunction(grid, {0.0, 0.0, 1.0}, kUnit));
  ComplexField a = ambiguity_from_density(rho);

  PhaseGrid wrong = a.grid;
  wrong.axis2.step *= 1.01;
  CHECK_THROWS_AS(ambiguity_from_density(rho, wrong), InvalidArgument);

  ComplexField tampered = a;
  tampered.grid.axis1.step *= 2.0;
  CHECK_THROWS_AS(reconstruct_density(tampered), InvalidArgument);
  CHECK_THROWS_AS(ambiguity_to_wigner(tampered), InvalidArgument);

  CHECK_THROWS_AS(wigner_value(rho, 0.21 * 0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(wigner_value(rho, 1e4, 0.0), InvalidArgument);

  ComplexField w = wigner_from_density(rho);
  CHECK_THROWS_AS(marginal(w, MarginalAxis::eta), InvalidArgument);
  CHECK_THROWS_AS(wigner_to_ambiguity(a), InvalidArgument);
}
