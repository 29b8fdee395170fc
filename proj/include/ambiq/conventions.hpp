#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ambiq/constants.hpp"

// Every transform normalization lives here, named once, so no constant is
// inlined in two places with a chance to drift apart.
namespace ambiq::conventions {

// Theta(eta,xi) = D(eta,xi) / sqrt(2*pi*hbar), D = exp[i(eta q + xi p)/hbar].
inline double displacement_normalization(const PhysicalConstants& c) {
  return 1.0 / std::sqrt(2.0 * kPi * c.hbar);
}

// A(eta,xi) = (2*pi*hbar)^(-1/2) * Integral dc e^{+i eta c/hbar} rho(c+xi/2, c-xi/2).
inline double ambiguity_prefactor(const PhysicalConstants& c) {
  return 1.0 / std::sqrt(2.0 * kPi * c.hbar);
}

// W(q,p) = (2*pi*hbar)^(-1) * Integral dxi e^{-i p xi/hbar} rho(q+xi/2, q-xi/2).
inline double wigner_prefactor(const PhysicalConstants& c) {
  return 1.0 / (2.0 * kPi * c.hbar);
}

// W(q,p) = (2*pi*hbar)^(-3/2) * Integral deta dxi e^{-i(eta q + xi p)/hbar} A(eta,xi).
inline double bridge_to_wigner_prefactor(const PhysicalConstants& c) {
  return std::pow(2.0 * kPi * c.hbar, -1.5);
}

// A(eta,xi) = (2*pi*hbar)^(-1/2) * Integral dq dp e^{+i(eta q + xi p)/hbar} W(q,p).
inline double bridge_to_ambiguity_prefactor(const PhysicalConstants& c) {
  return 1.0 / std::sqrt(2.0 * kPi * c.hbar);
}

// Marginals of A over one axis carry a (2*pi*hbar)^(-1/2) weight.
inline double marginal_prefactor(const PhysicalConstants& c) {
  return 1.0 / std::sqrt(2.0 * kPi * c.hbar);
}

// Expectation pairing <op> = sum_ab table[a,b] d^a_eta d^b_xi P(0,0); the
// sqrt(2*pi*hbar) scale folded into every compiled descriptor table.
inline double descriptor_scale(const PhysicalConstants& c) {
  return std::sqrt(2.0 * kPi * c.hbar);
}

// dP/dt = kernel_coupling * Integral deta' dxi' sin[(eta xi' - eta' xi)/(2 hbar)]
//         * H(eta',xi') * P(eta-eta', xi-xi').
inline double kernel_coupling(const PhysicalConstants& c) {
  return 2.0 / (c.hbar * std::sqrt(2.0 * kPi * c.hbar));
}

// Seed quadrature W(q,p) = (2*pi*hbar)^(-2) * Integral deta dxi
//                          e^{-i(eta q + xi p)/hbar} D(eta,xi).
inline double seed_quadrature_prefactor(const PhysicalConstants& c) {
  return std::pow(2.0 * kPi * c.hbar, -2.0);
}

// Displaced parity W(q,p) = (pi*hbar)^(-1) * D(p,-q) R D(p,-q)^dagger.
inline double displaced_parity_prefactor(const PhysicalConstants& c) {
  return 1.0 / (kPi * c.hbar);
}

struct ConventionRow {
  std::string name;
  std::string formula;
  double value_at_unit_hbar;
};

std::vector<ConventionRow> table();

}  // namespace ambiq::conventions
