#pragma once

#include <vector>

#include "ambiq/field.hpp"
#include "ambiq/grid.hpp"
#include "ambiq/states.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Closed-form ambiguity function of a Gaussian wavepacket,
//
//   A(eta, xi) = (2*pi*hbar)^(-1/2) * exp[i(eta*x + xi*k)/hbar]
//                                   * exp[-eta^2*Delta/(4*hbar^2) - xi^2/(4*Delta)].
//
// Evaluable anywhere, differentiable to any order at the origin; used as the
// analytic reference for the grid transforms and as the exact-derivative path
// for expectation values.
struct AmbiguityClosedFormGaussian {
  GaussianSpec spec;
  PhysicalConstants constants;

  Complex value(double eta, double xi) const;

  // d^a/d eta^a d^b/d xi^b A at (0, 0), exact.  The two axis factors
  // f(u) = exp(i c u - alpha u^2) satisfy the recurrence
  // f^(n+1)(0) = i c f^(n)(0) - 2 alpha n f^(n-1)(0).
  Complex derivative_at_origin(int a, int b) const;

  // Samples on a phase grid, for comparisons with transform output.
  ComplexField sample(const PhaseGrid& grid) const;
};

AmbiguityClosedFormGaussian gaussian_ambiguity_closed(const GaussianSpec& spec,
                                                      const PhysicalConstants& c);

// The (eta, xi) grid pair carried by ambiguity fields built from a density
// matrix on `position`: eta is the conjugate axis, xi reuses the position
// step and count.  Both axes are origin-anchored, and they are mutually
// conjugate (step_eta * step_xi * count = 2*pi*hbar), so the pair is closed
// under the Fourier bridge.
PhaseGrid make_ambiguity_grid(const Grid1D& position, const PhysicalConstants& c);

// Wigner-side (q, p) grid pair: q is the position axis itself, p its
// conjugate.
PhaseGrid make_wigner_grid(const Grid1D& position, const PhysicalConstants& c);

// A(eta_a, xi_s) = (2*pi*hbar)^(-1/2) * h * sum_c exp(+i eta_a c / hbar)
//                  * rho(c + xi_s/2, c - xi_s/2).
//
// xi_s is an integer multiple sigma*h of the position step; for even sigma
// the centers c run over the position samples and for odd sigma over the
// midpoints between neighbouring samples, so every (bra, ket) index pair is
// exact and no interpolation happens.  A(0,0) = Tr(rho)/sqrt(2*pi*hbar).
ComplexField ambiguity_from_density(const DensityMatrix& rho);

// Same, but verifies the caller's expected output grid first.
ComplexField ambiguity_from_density(const DensityMatrix& rho, const PhaseGrid& requested);

// Exact inverse of ambiguity_from_density on the covered band
// |j - l| <= count/2: each fixed-parity row family is a plain DFT over the
// center lattice, inverted in closed form.  On an even-count grid the one
// uncovered superdiagonal is completed by Hermitian symmetry and the corner
// entries beyond the band are zero.
DensityMatrix reconstruct_density(const ComplexField& ambiguity);

// W(q_j, p_b) = (2*pi*hbar)^(-1) * h * sum_s exp(-i p_b xi_s / hbar)
//               * rho(q_j + xi_s/2, q_j - xi_s/2)
// on (q = position axis, p = conjugate axis).  At a position sample only the
// even-parity anti-diagonals pass through exact index pairs; the odd-parity
// family lives on midpoint centers and enters through exact band-limited
// interpolation (the same Dirichlet kernel the Fourier bridge applies), so
// this route and the bridge agree to rounding.
ComplexField wigner_from_density(const DensityMatrix& rho);

// Point evaluation of the Wigner function at (q, p).  q must lie on the
// half-step center lattice of the position grid; only the anti-diagonal
// parity family passing through q exists there, so the transform sum runs
// over that family alone with Riemann weight 2h.  p is unrestricted.
Complex wigner_value(const DensityMatrix& rho, double q, double p);

// W(q, p) = (2*pi*hbar)^(-3/2) * integral of exp(-i(eta q + xi p)/hbar) * A
// over (eta, xi), as a grid quadrature.  Output axes are the conjugates of
// the input axes.
ComplexField ambiguity_to_wigner(const ComplexField& ambiguity);

// A(eta, xi) = (2*pi*hbar)^(-1/2) * integral of exp(+i(eta q + xi p)/hbar) * W
// over (q, p).  Exact inverse of ambiguity_to_wigner on conjugate grid pairs
// (the discrete quadratures are mutually orthogonal sums).
ComplexField wigner_to_ambiguity(const ComplexField& wigner);

enum class MarginalAxis { eta, xi };

// Single-axis integral of an ambiguity field and the axis it lives on.
//
//   axis = eta:  m(xi)  = (2*pi*hbar)^(-1/2) * step_eta * sum_a A(eta_a, xi)
//                       = <q = +xi/2 | Op | q = -xi/2>
//   axis = xi:   m(eta) = (2*pi*hbar)^(-1/2) * step_xi  * sum_s A(eta, xi_s)
//                       = <p = -eta/2 | Op | p = +eta/2>
//
// i.e. the position / momentum anti-diagonal matrix elements of the operator
// the field represents.  The two orderings really do differ: exp(i xi p/hbar)
// shifts position down while exp(i eta q/hbar) shifts momentum up, so the
// integrated delta lands on q = +xi/2 but p = -eta/2.
struct Marginal {
  Grid1D axis;
  CVector values;
};

Marginal marginal(const ComplexField& ambiguity, MarginalAxis axis);

}  // namespace ambiq
