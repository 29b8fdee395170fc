#pragma once

#include <complex>
#include <numbers>

#include "ambiq/errors.hpp"

namespace ambiq {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// Physical constants carried by every field and state object so that objects
// built with different units can never be combined silently.
struct PhysicalConstants {
  double hbar = 1.0;

  void validate() const {
    if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  }
};

inline bool same_constants(const PhysicalConstants& a, const PhysicalConstants& b) {
  return a.hbar == b.hbar;
}

}  // namespace ambiq
