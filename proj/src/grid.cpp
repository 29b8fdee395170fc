#include "ambiq/grid.hpp"

#include <cmath>

namespace ambiq {

std::vector<double> Grid1D::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) v[static_cast<std::size_t>(j)] = value(j);
  return v;
}

int Grid1D::origin() const {
  const double j = origin_index;
  const double r = std::round(j);
  if (std::abs(j - r) > 1e-12) return -1;
  const int idx = static_cast<int>(r);
  return (idx >= 0 && idx < count) ? idx : -1;
}

int Grid1D::reflect(int j) const {
  const double r = 2.0 * origin_index - static_cast<double>(j);
  const double ri = std::round(r);
  if (std::abs(r - ri) > 1e-12) return -1;
  const int idx = static_cast<int>(ri);
  return (idx >= 0 && idx < count) ? idx : -1;
}

int Grid1D::index_of(double x, double tol) const {
  const double j = x / step + origin_index;
  const double r = std::round(j);
  if (std::abs(j - r) > tol) return -1;
  const int idx = static_cast<int>(r);
  return (idx >= 0 && idx < count) ? idx : -1;
}

void Grid1D::validate() const {
  if (count < 2) throw InvalidArgument("grid count must be at least 2");
  if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
}

bool same_grid(const Grid1D& a, const Grid1D& b) {
  return a.count == b.count && a.step == b.step && a.origin_index == b.origin_index;
}

Grid1D make_centered_grid(int count, double step) {
  Grid1D g{count, step, (static_cast<double>(count) - 1.0) / 2.0, std::nullopt};
  g.validate();
  return g;
}

Grid1D make_fourier_grid(int count, double step) {
  Grid1D g{count, step, static_cast<double>(count / 2), std::nullopt};
  g.validate();
  return g;
}

Grid1D conjugate_grid(const Grid1D& g, const PhysicalConstants& c) {
  g.validate();
  c.validate();
  const double fresh = 2.0 * kPi * c.hbar / (static_cast<double>(g.count) * g.step);
  Grid1D out = g;
  if (g.conjugate_hint && std::abs(g.conjugate_hint->step - fresh) <= 4.0 * std::abs(fresh) * 1e-16) {
    out.step = g.conjugate_hint->step;
    out.origin_index = g.conjugate_hint->origin_index;
  } else {
    out.step = fresh;
    out.origin_index = static_cast<double>(g.count / 2);
  }
  out.conjugate_hint = Grid1D::Partner{g.step, g.origin_index};
  return out;
}

bool same_phase_grid(const PhaseGrid& a, const PhaseGrid& b) {
  return same_grid(a.axis1, b.axis1) && same_grid(a.axis2, b.axis2) && a.labels == b.labels;
}

}  // namespace ambiq
