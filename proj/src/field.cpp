#include "ambiq/field.hpp"

#include <cmath>

#include "ambiq/errors.hpp"

namespace ambiq {

std::string to_string(FieldKind k) {
  return k == FieldKind::ambiguity ? "ambiguity" : "wigner";
}

void ComplexField::validate() const {
  grid.axis1.validate();
  grid.axis2.validate();
  constants.validate();
  if (values.rows() != grid.axis1.count || values.cols() != grid.axis2.count)
    throw InvalidArgument("field shape does not match its grid");
}

double hermitian_symmetry_error(const ComplexField& f) {
  f.validate();
  const Grid1D& g1 = f.grid.axis1;
  const Grid1D& g2 = f.grid.axis2;
  double worst = 0.0;
  if (f.kind == FieldKind::wigner) {
    for (int i = 0; i < g1.count; ++i)
      for (int j = 0; j < g2.count; ++j)
        worst = std::max(worst, std::abs(f.values(i, j).imag()));
    return worst;
  }
  for (int i = 0; i < g1.count; ++i) {
    const int ri = g1.reflect(i);
    if (ri < 0 || ri >= g1.count) continue;
    for (int j = 0; j < g2.count; ++j) {
      const int rj = g2.reflect(j);
      if (rj < 0 || rj >= g2.count) continue;
      worst = std::max(worst, std::abs(f.values(ri, rj) - std::conj(f.values(i, j))));
    }
  }
  return worst;
}

Complex field_integral(const ComplexField& f) {
  f.validate();
  return f.grid.axis1.step * f.grid.axis2.step * f.values.sum();
}

}  // namespace ambiq
