#include "ambiq/conventions.hpp"

namespace ambiq::conventions {

std::vector<ConventionRow> table() {
  const PhysicalConstants unit{};
  return {
      {"displacement_normalization", "Theta = D / sqrt(2 pi hbar)", displacement_normalization(unit)},
      {"ambiguity_prefactor", "A = (2 pi hbar)^(-1/2) Int dc e^{+i eta c/hbar} rho(c+xi/2, c-xi/2)",
       ambiguity_prefactor(unit)},
      {"wigner_prefactor", "W = (2 pi hbar)^(-1) Int dxi e^{-i p xi/hbar} rho(q+xi/2, q-xi/2)",
       wigner_prefactor(unit)},
      {"bridge_to_wigner_prefactor", "W = (2 pi hbar)^(-3/2) Int deta dxi e^{-i(eta q + xi p)/hbar} A",
       bridge_to_wigner_prefactor(unit)},
      {"bridge_to_ambiguity_prefactor", "A = (2 pi hbar)^(-1/2) Int dq dp e^{+i(eta q + xi p)/hbar} W",
       bridge_to_ambiguity_prefactor(unit)},
      {"marginal_prefactor", "m = (2 pi hbar)^(-1/2) Int A over one axis", marginal_prefactor(unit)},
      {"descriptor_scale", "identity operator compiles to sqrt(2 pi hbar) delta(eta) delta(xi)",
       descriptor_scale(unit)},
      {"kernel_coupling", "dP/dt = (2/hbar) Int (deta' dxi'/sqrt(2 pi hbar)) sin[(eta xi' - eta' xi)/(2 hbar)] H P",
       kernel_coupling(unit)},
      {"seed_quadrature_prefactor", "W_seed = (2 pi hbar)^(-2) Int deta dxi e^{-i(eta q + xi p)/hbar} D",
       seed_quadrature_prefactor(unit)},
      {"displaced_parity_prefactor", "W_seed = (pi hbar)^(-1) D(p,-q) R D(p,-q)^dagger",
       displaced_parity_prefactor(unit)},
  };
}

}  // namespace ambiq::conventions
