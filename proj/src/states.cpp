#include "ambiq/states.hpp"

#include <cmath>

#include "ambiq/errors.hpp"

namespace ambiq {

void GaussianSpec::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("packet width must be positive");
  if (!std::isfinite(x) || !std::isfinite(k)) throw InvalidArgument("packet parameters must be finite");
}

void WaveFunction::validate() const {
  grid.validate();
  constants.validate();
  if (samples.size() != grid.count) throw InvalidArgument("wavefunction sample count mismatch");
}

double WaveFunction::norm() const { return grid.step * samples.squaredNorm(); }

void DensityMatrix::validate() const {
  grid.validate();
  constants.validate();
  if (entries.rows() != grid.count || entries.cols() != grid.count)
    throw InvalidArgument("density matrix shape mismatch");
}

Complex DensityMatrix::trace() const { return grid.step * entries.trace(); }

double DensityMatrix::hermiticity_error() const {
  return max_abs(entries - CMatrix(entries.adjoint()));
}

namespace {

Complex packet_amplitude(double q, const GaussianSpec& s, double hbar) {
  const double amp = std::pow(kPi * s.delta, -0.25) * std::exp(-(q - s.x) * (q - s.x) / (2.0 * s.delta));
  return std::polar(amp, s.k * q / hbar);
}

void check_packet_fit(const Grid1D& grid, const GaussianSpec& s, std::vector<std::string>* warnings) {
  const double width = std::sqrt(s.delta);
  const double margin_lo = s.x - grid.min();
  const double margin_hi = grid.max() - s.x;
  const double margin = std::min(margin_lo, margin_hi);
  // Boundary amplitude relative to the peak: exp(-margin^2 / (2 delta)).
  if (margin < 0.0 || std::exp(-margin * margin / (2.0 * s.delta)) > 1e-8)
    throw DomainTooSmall("packet tail exceeds 1e-8 of the peak at the grid boundary");
  if (warnings) {
    if (margin < 10.0 * width)
      warnings->push_back("grid margin around the packet center is below 10 widths");
    if (width < 3.0 * grid.step)
      warnings->push_back("packet width is under 3 grid steps; sampling is marginal");
  }
}

}  // namespace

WaveFunction gaussian_wavefunction(const Grid1D& grid, const GaussianSpec& spec,
                                   const PhysicalConstants& constants,
                                   std::vector<std::string>* warnings) {
  grid.validate();
  spec.validate();
  constants.validate();
  check_packet_fit(grid, spec, warnings);
  WaveFunction psi{grid, CVector(grid.count), constants};
  for (int j = 0; j < grid.count; ++j)
    psi.samples[j] = packet_amplitude(grid.value(j), spec, constants.hbar);
  psi.samples *= 1.0 / std::sqrt(psi.norm());
  return psi;
}

WaveFunction superposition_state(const Grid1D& grid, const std::vector<GaussianSpec>& specs,
                                 const std::vector<Complex>& weights,
                                 const PhysicalConstants& constants,
                                 std::vector<std::string>* warnings) {
  grid.validate();
  constants.validate();
  if (specs.empty()) throw InvalidArgument("superposition needs at least one component");
  if (specs.size() != weights.size())
    throw InvalidArgument("superposition component/weight count mismatch");
  for (const auto& s : specs) {
    s.validate();
    if (std::sqrt(s.delta) < 3.0 * grid.step)
      throw InvalidArgument("component width must be at least 3 grid steps");
    if (s.x < grid.min() || s.x > grid.max())
      throw InvalidArgument("component center lies outside the grid");
    check_packet_fit(grid, s, warnings);
  }
  WaveFunction psi{grid, CVector::Zero(grid.count), constants};
  for (std::size_t c = 0; c < specs.size(); ++c)
    for (int j = 0; j < grid.count; ++j)
      psi.samples[j] += weights[c] * packet_amplitude(grid.value(j), specs[c], constants.hbar);
  const double n = psi.norm();
  if (!(n > 0.0)) throw InvalidArgument("superposition has zero norm");
  psi.samples *= 1.0 / std::sqrt(n);
  return psi;
}

DensityMatrix density_from_wavefunction(const WaveFunction& psi) {
  psi.validate();
  DensityMatrix rho{psi.grid, CMatrix(psi.grid.count, psi.grid.count), psi.constants};
  rho.entries.noalias() = psi.samples * psi.samples.adjoint();
  return rho;
}

DensityMatrix mixed_state(const std::vector<WaveFunction>& states,
                          const std::vector<double>& probabilities) {
  if (states.empty()) throw InvalidArgument("mixture needs at least one state");
  if (states.size() != probabilities.size())
    throw InvalidArgument("mixture state/probability count mismatch");
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw InvalidArgument("mixture probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("mixture probabilities must sum to 1");
  const auto& first = states.front();
  first.validate();
  DensityMatrix rho{first.grid, CMatrix::Zero(first.grid.count, first.grid.count), first.constants};
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i].validate();
    if (!same_grid(states[i].grid, first.grid) ||
        !same_constants(states[i].constants, first.constants))
      throw InvalidArgument("mixture states must share a grid and constants");
    rho.entries.noalias() += probabilities[i] * (states[i].samples * states[i].samples.adjoint());
  }
  return rho;
}

double purity(const DensityMatrix& rho) {
  rho.validate();
  return rho.grid.step * rho.grid.step * rho.entries.squaredNorm();
}

Complex overlap(const DensityMatrix& a, const DensityMatrix& b) {
  a.validate();
  b.validate();
  if (!same_grid(a.grid, b.grid) || !same_constants(a.constants, b.constants))
    throw InvalidArgument("overlap requires matching grids and constants");
  return a.grid.step * a.grid.step * (a.entries.array() * b.entries.transpose().array()).sum();
}

}  // namespace ambiq
