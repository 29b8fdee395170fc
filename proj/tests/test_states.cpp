#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ambiq/errors.hpp"
#include "ambiq/states.hpp"

using namespace ambiq;

namespace {

const PhysicalConstants kUnit{1.0};

WaveFunction packet(double x, double k, double delta) {
  auto grid = make_centered_grid(256, 0.1);
  return gaussian_wavefunction(grid, {x, k, delta}, kUnit);
}

}  // namespace

TEST_CASE("unit-width packet peak value") {
  auto grid = make_centered_grid(255, 0.1);  // odd count puts a sample at q = 0
  auto psi = gaussian_wavefunction(grid, {0.0, 0.0, 1.0}, kUnit);
  CHECK(psi.samples[127].real() == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-9));
  CHECK(std::abs(psi.samples[127].imag()) < 1e-15);
}

TEST_CASE("gaussian packet is normalized and correctly located") {
  auto psi = packet(1.0, 2.0, 1.0);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  double mean_q = 0.0, mean_qq = 0.0;
  for (int j = 0; j < psi.grid.count; ++j) {
    const double q = psi.grid.value(j);
    const double w = std::norm(psi.samples[j]) * psi.grid.step;
    mean_q += q * w;
    mean_qq += q * q * w;
  }
  CHECK(mean_q == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mean_qq - mean_q * mean_q == doctest::Approx(0.5).epsilon(1e-10));

  // Momentum enters as a pure phase gradient: psi(q_j) e^{-ik q_j} is real
  // and positive.
  for (int j = 100; j < 160; ++j) {
    const Complex flat = psi.samples[j] * std::polar(1.0, -2.0 * psi.grid.value(j));
    CHECK(std::abs(flat.imag()) < 1e-14);
    CHECK(flat.real() > 0.0);
  }
}

TEST_CASE("density matrix trace, hermiticity, purity") {
  auto psi = packet(0.5, -1.0, 0.8);
  auto rho = density_from_wavefunction(psi);
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
  CHECK(rho.hermiticity_error() < 1e-15);
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(overlap(rho, rho) - Complex(purity(rho))) < 1e-14);
}

TEST_CASE("mixture of well-separated packets halves the purity") {
  auto a = packet(-3.0, 0.0, 1.0);
  auto b = packet(3.0, 0.0, 1.0);
  auto rho = mixed_state({a, b}, {0.5, 0.5});
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
  // Cross terms decay like exp(-d^2/(4 delta)) with d = 6.
  CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-6));
  auto rho_a = density_from_wavefunction(a);
  CHECK(std::abs(overlap(rho, rho_a) - Complex(0.5)) < 1e-6);
}

TEST_CASE("superposition is normalized including interference") {
  auto grid = make_centered_grid(256, 0.1);
  auto cat = superposition_state(grid, {{-2.0, 0.0, 1.0}, {2.0, 0.0, 1.0}}, {1.0, 1.0}, kUnit);
  CHECK(cat.norm() == doctest::Approx(1.0).epsilon(1e-13));
  auto rho = density_from_wavefunction(cat);
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("domain and sampling guards") {
  auto grid = make_centered_grid(256, 0.1);
  CHECK_THROWS_AS(gaussian_wavefunction(grid, {12.0, 0.0, 1.0}, kUnit), DomainTooSmall);
  CHECK_THROWS_AS(superposition_state(grid, {{0.0, 0.0, 0.01}}, {1.0}, kUnit), InvalidArgument);
  CHECK_THROWS_AS(superposition_state(grid, {{40.0, 0.0, 1.0}}, {1.0}, kUnit), InvalidArgument);
  CHECK_THROWS_AS(gaussian_wavefunction(grid, {0.0, 0.0, -1.0}, kUnit), InvalidArgument);

  std::vector<std::string> notes;
  auto narrow = make_centered_grid(64, 0.1);  // margin 3.15 < 10 * 0.4
  (void)gaussian_wavefunction(narrow, {0.0, 0.0, 0.16}, kUnit, &notes);
  CHECK(!notes.empty());
}

TEST_CASE("mixture validation") {
  auto a = packet(-1.0, 0.0, 1.0);
  auto b = packet(1.0, 0.0, 1.0);
  CHECK_THROWS_AS(mixed_state({a, b}, {0.7, 0.4}), InvalidArgument);
  CHECK_THROWS_AS(mixed_state({a, b}, {1.2, -0.2}), InvalidArgument);
  auto other = gaussian_wavefunction(make_centered_grid(128, 0.1), {0.0, 0.0, 1.0}, kUnit);
  CHECK_THROWS_AS(mixed_state({a, other}, {0.5, 0.5}), InvalidArgument);
}
