#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ambiq/constants.hpp"

namespace ambiq {

// Uniform 1-D sample axis. values[j] = (j - origin_index) * step.
//
// Two centerings are used:
//   * symmetric (origin_index = (count-1)/2): reflection j -> count-1-j is an
//     exact grid automorphism; even counts have no 0 sample. Used for
//     position axes.
//   * origin-anchored (origin_index = floor(count/2)): 0 is always a sample
//     and every value is an integer multiple of step; for even counts the
//     extreme value has no negated partner. Used for transform-domain axes
//     (eta, xi, and Wigner q/p), where fields are evaluated and
//     differentiated at the origin and reflected about it.
// The two coincide for odd counts.
struct Grid1D {
  int count = 0;
  double step = 0.0;
  double origin_index = 0.0;
  // (step, origin_index) of the grid this one was built from by
  // conjugate_grid, if any. Lets conjugate_grid return the original grid
  // bit-for-bit instead of re-dividing the step (which would not round-trip
  // exactly) and re-deriving the centering (which is not recoverable: fresh
  // conjugates are always origin-anchored regardless of input centering).
  struct Partner {
    double step;
    double origin_index;
  };
  std::optional<Partner> conjugate_hint;

  double value(int j) const { return (static_cast<double>(j) - origin_index) * step; }
  double min() const { return value(0); }
  double max() const { return value(count - 1); }
  std::vector<double> values() const;

  // Index of the 0 sample; -1 when 0 is not a sample.
  int origin() const;

  // Index j' with value(j') == -value(j); -1 when unpaired.
  int reflect(int j) const;

  // Nearest index to x, or -1 if x is not a sample within tol*step.
  int index_of(double x, double tol = 1e-9) const;

  void validate() const;
};

bool same_grid(const Grid1D& a, const Grid1D& b);

// Symmetric centering; values[j] = (j - (count-1)/2) * step.
Grid1D make_centered_grid(int count, double step);

// Origin-anchored centering; values[j] = (j - floor(count/2)) * step.
Grid1D make_fourier_grid(int count, double step);

// Same count, step' = 2*pi*hbar / (count*step), origin-anchored centering
// (transform-domain axes are differentiated and reflected at 0, so 0 must be
// a sample). Exact involution: applying it twice restores the input grid,
// including a symmetric input's centering, via conjugate_hint.
Grid1D conjugate_grid(const Grid1D& g, const PhysicalConstants& c);

// Pair of axes carrying a 2-D field, tagged with axis names
// (("eta","xi") for ambiguity fields, ("q","p") for Wigner fields).
struct PhaseGrid {
  Grid1D axis1;
  Grid1D axis2;
  std::array<std::string, 2> labels;
};

bool same_phase_grid(const PhaseGrid& a, const PhaseGrid& b);

}  // namespace ambiq
