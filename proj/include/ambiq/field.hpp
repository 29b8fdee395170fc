#pragma once

#include <string>

#include "ambiq/constants.hpp"
#include "ambiq/grid.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Which phase-space representation a field's samples belong to.  The two
// kinds share storage and grid conventions; they differ in the transform
// that produced them and in the symmetry they are expected to satisfy.
enum class FieldKind { ambiguity, wigner };

std::string to_string(FieldKind k);

// A complex-valued function sampled on a two-axis phase-space grid.
// values(i, j) is the sample at (axis1.value(i), axis2.value(j)).  Ambiguity
// fields use origin-anchored axes on both sides, so the origin sample
// values(origin1, origin2) is always available for normalization anchors and
// derivative stencils.  Wigner fields keep the source position axis (which
// may be symmetric, with no origin sample) as axis1 and an origin-anchored
// momentum axis as axis2.
struct ComplexField {
  PhaseGrid grid;
  CMatrix values;
  FieldKind kind = FieldKind::ambiguity;
  PhysicalConstants constants;

  void validate() const;

  Complex at(int i, int j) const { return values(i, j); }
  Complex at_origin() const { return values(grid.axis1.origin(), grid.axis2.origin()); }
};

// Largest deviation from the point symmetry f(-u, -v) = conj(f(u, v)) for an
// ambiguity field, or from realness for a Wigner field.  Rows/columns whose
// mirror image falls outside the grid (the unpaired extreme row and column of
// an even-count origin-anchored axis) are skipped.
double hermitian_symmetry_error(const ComplexField& f);

// Plain two-axis Riemann sum: step1 * step2 * sum of samples.
Complex field_integral(const ComplexField& f);

}  // namespace ambiq
