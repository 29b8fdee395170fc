#pragma once

#include "ambiq/ambiguity.hpp"
#include "ambiq/constants.hpp"
#include "ambiq/field.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Constant-force Hamiltonian p^2/(2m) - F q, with the sign convention that
// makes <p(t)> = k + F t and <q(t)> = x + k t / m + F t^2 / (2m).
struct ConstantForceParams {
  double mass = 1.0;
  double force = 0.0;

  void validate() const;
};

// Area-preserving reparametrization of the (eta, xi) plane: the evolved field
// reads its value at (alpha*eta + gamma*xi, beta*eta + delta*xi).
struct LinearCanonicalMap {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 1.0;

  double determinant() const { return alpha * delta - beta * gamma; }
};

// Constant-force propagation in closed form: a phase factor times a shear of
// the xi argument,
//   P(eta, xi, t) = exp[ i F t (2 xi + eta t / m) / (2 hbar) ]
//                   * P0(eta, xi + eta t / m).
// Derived from the Heisenberg motion q(t) = q + p t/m + F t^2/(2m),
// p(t) = p + F t of the displacement generator; the signs are pinned by the
// Ehrenfest checks below (<q> must gain +F t^2 / 2m, not lose it).
struct EvolvedClosedForm {
  AmbiguityClosedFormGaussian initial;
  ConstantForceParams params;
  double time = 0.0;

  Complex value(double eta, double xi) const;
  ComplexField sample(const PhaseGrid& grid) const;
};

EvolvedClosedForm evolve_const_force_closed(const AmbiguityClosedFormGaussian& p0,
                                            const ConstantForceParams& params, double t);

// Same propagation applied to a sampled field: per-row Fourier-phase shift of
// the xi axis (exact for band-limited rows) followed by the phase factor.
// Rows whose significant support (above 1e-9 of the field peak) would be
// sheared past the xi boundary raise DomainOverflow; the circular wrap of the
// spectral shift is only valid while the wrapped-in samples are negligible.
ComplexField evolve_const_force_closed(const ComplexField& p0,
                                       const ConstantForceParams& params, double t);

// Integrates d/dt P = (eta / m) dP/dxi + (i F xi / hbar) P with classical
// RK4, xi-derivatives spectral.  Stability precondition:
//   dt * (max|eta| * pi / (m * step_xi) + |F| * max|xi| / hbar) <= 2.8
// (RK4 imaginary-axis bound 2*sqrt(2) with margin; the first term is the
// advection rate at the Nyquist wavenumber, the second the force phase rate).
// Violations raise InvalidArgument up front; a runaway norm (growth beyond
// 10x the initial peak) raises NumericalInstability mid-run.
ComplexField evolve_generator_const_force(const ComplexField& p, const ConstantForceParams& params,
                                          double dt, int steps);

// Which side of the trace evolves: the state (d/dt rho = -i/hbar [H, rho]) or
// the observable (Heisenberg picture, the same equation with t -> -t).
enum class KernelDirection { state, observable };

// General evolution for a Hamiltonian given as a sampled ambiguity field:
//   d/dt P(eta, xi) = (2 / hbar) Integral dEta' dXi' / sqrt(2 pi hbar)
//       sin[(eta xi' - eta' xi) / (2 hbar)] H(eta', xi') P(eta - eta', xi - xi')
// integrated with RK4; the convolution is a direct quadrature with both
// fields zero outside their grid.  direction=observable flips the sign of
// the right-hand side.  The quadrature runs over the reflection-paired band:
// the unpaired extreme row/column of an even-count axis is excluded from
// both factors and from the output (same convention as the trace product),
// which keeps the Hermitian point symmetry of the field exact under
// evolution; the boundary samples simply keep their initial values.  On
// conjugate-pair grids (step1 * step2 * count = 2 pi hbar, origin-anchored)
// the sine argument is an exact multiple of pi / count, so the kernel
// reduces to an integer-indexed sine table.
// H must be the transform of a finite operator matrix -- polynomial
// Hamiltonians are distributions in (eta, xi) and belong to the generator or
// closed-form paths instead.
ComplexField evolve_kernel(const ComplexField& p, const ComplexField& h, double dt, int steps,
                           KernelDirection direction);

// Substitution evolution A'(eta, xi) = A(alpha*eta + gamma*xi,
// beta*eta + delta*xi) for a unit-determinant map (|det - 1| <= 1e-9,
// InvalidArgument otherwise).  Mapped points are read by bicubic
// (Catmull-Rom) interpolation, zero outside the source grid.
ComplexField evolve_linear_canonical(const ComplexField& a, const LinearCanonicalMap& map);

}  // namespace ambiq
