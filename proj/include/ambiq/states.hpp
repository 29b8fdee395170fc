#pragma once

#include <string>
#include <vector>

#include "ambiq/constants.hpp"
#include "ambiq/grid.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Gaussian wavepacket parameters: mean position x, mean momentum k, and
// position-space width delta.  The packet is
//   psi(q) = (pi*delta)^(-1/4) * exp(-(q-x)^2 / (2*delta)) * exp(i*k*q/hbar)
// so <q> = x, <p> = k, Var(q) = delta/2, Var(p) = hbar^2/(2*delta).
struct GaussianSpec {
  double x = 0.0;
  double k = 0.0;
  double delta = 1.0;

  void validate() const;
};

// Wavefunction sampled on a symmetric position grid.  The discrete norm is
// step * sum |psi_j|^2.
struct WaveFunction {
  Grid1D grid;
  CVector samples;
  PhysicalConstants constants;

  void validate() const;
  double norm() const;
};

// Density operator stored as kernel samples: entries(j, l) = rho(q_j, q_l).
// Traces and products carry one factor of the grid step per contracted index,
// matching the continuum integrals they discretize.
struct DensityMatrix {
  Grid1D grid;
  CMatrix entries;
  PhysicalConstants constants;

  void validate() const;
  Complex trace() const;
  double hermiticity_error() const;
};

// Samples the packet and renormalizes on the grid.  Throws DomainTooSmall
// when the boundary amplitude exceeds 1e-8 of the peak; appends advisory
// notes (margin under 10 widths, marginally resolved width) to `warnings`
// when provided.
WaveFunction gaussian_wavefunction(const Grid1D& grid, const GaussianSpec& spec,
                                   const PhysicalConstants& constants,
                                   std::vector<std::string>* warnings = nullptr);

// Numerically normalized weighted sum of Gaussian packets.  Every component
// width must satisfy sqrt(delta) >= 3 * step and every center must lie inside
// the grid; violations throw InvalidArgument.
WaveFunction superposition_state(const Grid1D& grid, const std::vector<GaussianSpec>& specs,
                                 const std::vector<Complex>& weights,
                                 const PhysicalConstants& constants,
                                 std::vector<std::string>* warnings = nullptr);

// rho(q, q') = psi(q) * conj(psi(q')).
DensityMatrix density_from_wavefunction(const WaveFunction& psi);

// Convex combination sum_i p_i |psi_i><psi_i|.  Probabilities must be
// non-negative and sum to 1 within 1e-12.
DensityMatrix mixed_state(const std::vector<WaveFunction>& states,
                          const std::vector<double>& probabilities);

// Tr(rho^2) = step^2 * sum |entries|^2 for a Hermitian kernel.
double purity(const DensityMatrix& rho);

// Tr(a * b) = step^2 * sum_{j,l} a(j,l) * b(l,j).
Complex overlap(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace ambiq
