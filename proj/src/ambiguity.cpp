#include "ambiq/ambiguity.hpp"

#include <cmath>
#include <vector>

#include "ambiq/conventions.hpp"
#include "ambiq/errors.hpp"

namespace ambiq {

namespace {

// Offsets sigma = xi_s / h as exact integers, split by parity.  w is the
// half-offset: sigma = 2w for the even family (centers on position samples),
// sigma = 2w+1 for the odd family (centers on midpoints).
struct FamilySplit {
  std::vector<int> even_cols, even_w;
  std::vector<int> odd_cols, odd_w;
};

int exact_int(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9) throw InvalidArgument(std::string(what) + " is not an integer");
  return static_cast<int>(r);
}

FamilySplit split_by_parity(const Grid1D& xi) {
  FamilySplit f;
  const int origin = exact_int(xi.origin_index, "xi origin index");
  for (int s = 0; s < xi.count; ++s) {
    const int sigma = s - origin;
    if (sigma % 2 == 0) {
      f.even_cols.push_back(s);
      f.even_w.push_back(sigma / 2);
    } else {
      f.odd_cols.push_back(s);
      // sigma = 2w + 1 for both signs: w = (sigma - 1) / 2 rounded toward
      // minus infinity.
      const int w = (sigma - 1) >= 0 ? (sigma - 1) / 2 : -((1 - sigma) / 2);
      f.odd_w.push_back(w);
    }
  }
  return f;
}

// Anti-diagonal gather: out(row, col) holds rho(j, l) for the col-th family
// member, zero where the pair leaves the matrix.  Even family rows are
// indexed by the position sample t with (j, l) = (t + w, t - w); odd family
// rows by the midpoint index i with (j, l) = (i + w + 1, i - w).
CMatrix gather_even(const CMatrix& rho, const std::vector<int>& ws) {
  const int n = static_cast<int>(rho.rows());
  CMatrix out = CMatrix::Zero(n, static_cast<Eigen::Index>(ws.size()));
  for (std::size_t c = 0; c < ws.size(); ++c) {
    const int w = ws[c];
    const int lo = std::abs(w), hi = n - 1 - std::abs(w);
    for (int t = lo; t <= hi; ++t) out(t, static_cast<Eigen::Index>(c)) = rho(t + w, t - w);
  }
  return out;
}

CMatrix gather_odd(const CMatrix& rho, const std::vector<int>& ws) {
  const int n = static_cast<int>(rho.rows());
  CMatrix out = CMatrix::Zero(n - 1, static_cast<Eigen::Index>(ws.size()));
  for (std::size_t c = 0; c < ws.size(); ++c) {
    const int w = ws[c];
    const int lo = std::max(w, -w - 1);
    const int hi = std::min(n - 2 - w, n - 1 + w);
    for (int i = lo; i <= hi; ++i) out(i, static_cast<Eigen::Index>(c)) = rho(i + w + 1, i - w);
  }
  return out;
}

// exp(sign * i * eta_a * c / hbar) over the eta lattice (rows) and a center
// lattice (cols).  `first_center` is the value of center 0; centers step by
// the position step.
CMatrix center_phases(const Grid1D& eta, int centers, double first_center, double step,
                      double hbar, double sign) {
  CMatrix m(eta.count, centers);
  for (int a = 0; a < eta.count; ++a) {
    const double e = eta.value(a);
    for (int t = 0; t < centers; ++t)
      m(a, t) = std::polar(1.0, sign * e * (first_center + t * step) / hbar);
  }
  return m;
}

CMatrix xi_phases(const Grid1D& p, const Grid1D& xi, const std::vector<int>& cols, double hbar) {
  CMatrix m(p.count, static_cast<Eigen::Index>(cols.size()));
  for (int b = 0; b < p.count; ++b)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m(b, static_cast<Eigen::Index>(c)) = std::polar(1.0, -p.value(b) * xi.value(cols[c]) / hbar);
  return m;
}

void require_conjugate_pair(const PhaseGrid& g, const PhysicalConstants& c) {
  const double target = 2.0 * kPi * c.hbar;
  if (g.axis1.count != g.axis2.count)
    throw InvalidArgument("field axes must share a sample count");
  const double prod = g.axis1.step * g.axis2.step * g.axis1.count;
  if (std::abs(prod - target) > 1e-9 * target)
    throw InvalidArgument("field axes are not mutually conjugate");
}

}  // namespace

Complex AmbiguityClosedFormGaussian::value(double eta, double xi) const {
  const double hbar = constants.hbar;
  const double mag = conventions::ambiguity_prefactor(constants) *
                     std::exp(-eta * eta * spec.delta / (4.0 * hbar * hbar) -
                              xi * xi / (4.0 * spec.delta));
  return std::polar(mag, (eta * spec.x + xi * spec.k) / hbar);
}

Complex AmbiguityClosedFormGaussian::derivative_at_origin(int a, int b) const {
  if (a < 0 || b < 0) throw InvalidArgument("derivative order must be nonnegative");
  const double hbar = constants.hbar;
  const auto axis_derivatives = [](int order, Complex ic, double alpha) {
    Complex prev{1.0, 0.0};
    if (order == 0) return prev;
    Complex cur = ic;
    for (int n = 1; n < order; ++n) {
      const Complex next = ic * cur - 2.0 * alpha * static_cast<double>(n) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  const Complex de = axis_derivatives(a, kI * (spec.x / hbar), spec.delta / (4.0 * hbar * hbar));
  const Complex dx = axis_derivatives(b, kI * (spec.k / hbar), 1.0 / (4.0 * spec.delta));
  return conventions::ambiguity_prefactor(constants) * de * dx;
}

ComplexField AmbiguityClosedFormGaussian::sample(const PhaseGrid& grid) const {
  ComplexField f{grid, CMatrix(grid.axis1.count, grid.axis2.count), FieldKind::ambiguity,
                 constants};
  for (int i = 0; i < grid.axis1.count; ++i)
    for (int j = 0; j < grid.axis2.count; ++j)
      f.values(i, j) = value(grid.axis1.value(i), grid.axis2.value(j));
  return f;
}

AmbiguityClosedFormGaussian gaussian_ambiguity_closed(const GaussianSpec& spec,
                                                      const PhysicalConstants& c) {
  spec.validate();
  c.validate();
  return AmbiguityClosedFormGaussian{spec, c};
}

PhaseGrid make_ambiguity_grid(const Grid1D& position, const PhysicalConstants& c) {
  position.validate();
  Grid1D xi = make_fourier_grid(position.count, position.step);
  return PhaseGrid{conjugate_grid(position, c), xi, {"eta", "xi"}};
}

PhaseGrid make_wigner_grid(const Grid1D& position, const PhysicalConstants& c) {
  position.validate();
  return PhaseGrid{position, conjugate_grid(position, c), {"q", "p"}};
}

ComplexField ambiguity_from_density(const DensityMatrix& rho) {
  rho.validate();
  const Grid1D& q = rho.grid;
  const PhysicalConstants& c = rho.constants;
  const int n = q.count;
  const PhaseGrid pg = make_ambiguity_grid(q, c);
  const FamilySplit fam = split_by_parity(pg.axis2);

  const double scale = conventions::ambiguity_prefactor(c) * q.step;
  const CMatrix even_phases = center_phases(pg.axis1, n, q.value(0), q.step, c.hbar, +1.0);
  const CMatrix odd_phases =
      center_phases(pg.axis1, n - 1, q.value(0) + 0.5 * q.step, q.step, c.hbar, +1.0);
  const CMatrix a_even = even_phases * gather_even(rho.entries, fam.even_w);
  const CMatrix a_odd = odd_phases * gather_odd(rho.entries, fam.odd_w);

  ComplexField f{pg, CMatrix(n, n), FieldKind::ambiguity, c};
  for (std::size_t col = 0; col < fam.even_cols.size(); ++col)
    f.values.col(fam.even_cols[col]) = scale * a_even.col(static_cast<Eigen::Index>(col));
  for (std::size_t col = 0; col < fam.odd_cols.size(); ++col)
    f.values.col(fam.odd_cols[col]) = scale * a_odd.col(static_cast<Eigen::Index>(col));
  return f;
}

ComplexField ambiguity_from_density(const DensityMatrix& rho, const PhaseGrid& requested) {
  ComplexField f = ambiguity_from_density(rho);
  if (!same_phase_grid(f.grid, requested))
    throw InvalidArgument("requested output grid does not match the density grid");
  return f;
}

DensityMatrix reconstruct_density(const ComplexField& ambiguity) {
  ambiguity.validate();
  if (ambiguity.kind != FieldKind::ambiguity)
    throw InvalidArgument("reconstruct_density needs an ambiguity field");
  const PhysicalConstants& c = ambiguity.constants;
  require_conjugate_pair(ambiguity.grid, c);
  const Grid1D q = conjugate_grid(ambiguity.grid.axis1, c);
  const Grid1D& xi = ambiguity.grid.axis2;
  if (std::abs(q.step - xi.step) > 1e-12 * q.step)
    throw InvalidArgument("xi axis step must equal the position step");
  const int n = q.count;
  const FamilySplit fam = split_by_parity(xi);

  // Each parity family of columns is, per column, a plain invertible DFT over
  // its center lattice.
  const double scale = 1.0 / (conventions::ambiguity_prefactor(c) * q.step * n);
  CMatrix a_even(n, static_cast<Eigen::Index>(fam.even_cols.size()));
  for (std::size_t col = 0; col < fam.even_cols.size(); ++col)
    a_even.col(static_cast<Eigen::Index>(col)) = ambiguity.values.col(fam.even_cols[col]);
  CMatrix a_odd(n, static_cast<Eigen::Index>(fam.odd_cols.size()));
  for (std::size_t col = 0; col < fam.odd_cols.size(); ++col)
    a_odd.col(static_cast<Eigen::Index>(col)) = ambiguity.values.col(fam.odd_cols[col]);

  const CMatrix even_phases = center_phases(ambiguity.grid.axis1, n, q.value(0), q.step,
                                            c.hbar, -1.0);
  const CMatrix odd_phases = center_phases(ambiguity.grid.axis1, n - 1,
                                           q.value(0) + 0.5 * q.step, q.step, c.hbar, -1.0);
  const CMatrix g_even = scale * (even_phases.transpose() * a_even);
  const CMatrix g_odd = scale * (odd_phases.transpose() * a_odd);

  DensityMatrix rho{q, CMatrix::Zero(n, n), c};
  for (std::size_t col = 0; col < fam.even_w.size(); ++col) {
    const int w = fam.even_w[col];
    for (int t = std::abs(w); t <= n - 1 - std::abs(w); ++t)
      rho.entries(t + w, t - w) = g_even(t, static_cast<Eigen::Index>(col));
  }
  for (std::size_t col = 0; col < fam.odd_w.size(); ++col) {
    const int w = fam.odd_w[col];
    for (int i = std::max(w, -w - 1); i <= std::min(n - 2 - w, n - 1 + w); ++i)
      rho.entries(i + w + 1, i - w) = g_odd(i, static_cast<Eigen::Index>(col));
  }

  // An even-count xi axis covers sigma in [-n/2, n/2); the one uncovered
  // superdiagonal at j - l = +n/2 is the mirror of the covered -n/2 one.
  if (n % 2 == 0) {
    const int w = n / 2;
    for (int l = 0; l + w < n; ++l) rho.entries(l + w, l) = std::conj(rho.entries(l, l + w));
  }
  return rho;
}

namespace {

// Band-limited interpolation weights from midpoint centers to position
// samples: K(j, i) = (1/N) * sum_a exp(i * eta_a * (m_i - q_j) / hbar).
// Toeplitz in (i - j); built once per transform.
CMatrix midpoint_to_sample_kernel(const Grid1D& eta, const Grid1D& q, double hbar) {
  const int n = q.count;
  std::vector<Complex> by_offset(static_cast<std::size_t>(2 * n - 2));
  for (int d = -(n - 1); d <= n - 2; ++d) {
    const double gap = (static_cast<double>(d) + 0.5) * q.step;
    Complex sum{0.0, 0.0};
    for (int a = 0; a < eta.count; ++a) sum += std::polar(1.0, eta.value(a) * gap / hbar);
    by_offset[static_cast<std::size_t>(d + n - 1)] = sum / static_cast<double>(eta.count);
  }
  CMatrix k(n, n - 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n - 1; ++i) k(j, i) = by_offset[static_cast<std::size_t>(i - j + n - 1)];
  return k;
}

}  // namespace

ComplexField wigner_from_density(const DensityMatrix& rho) {
  rho.validate();
  const Grid1D& q = rho.grid;
  const PhysicalConstants& c = rho.constants;
  const int n = q.count;
  const PhaseGrid pg = make_wigner_grid(q, c);
  const Grid1D xi = make_fourier_grid(n, q.step);
  const Grid1D eta = conjugate_grid(q, c);
  const FamilySplit fam = split_by_parity(xi);

  const CMatrix even_data = gather_even(rho.entries, fam.even_w);
  const CMatrix odd_at_samples =
      midpoint_to_sample_kernel(eta, q, c.hbar) * gather_odd(rho.entries, fam.odd_w);

  const CMatrix pe = xi_phases(pg.axis2, xi, fam.even_cols, c.hbar);
  const CMatrix po = xi_phases(pg.axis2, xi, fam.odd_cols, c.hbar);

  ComplexField f{pg, CMatrix(n, n), FieldKind::wigner, c};
  f.values = conventions::wigner_prefactor(c) * q.step *
             (even_data * pe.transpose() + odd_at_samples * po.transpose());
  return f;
}

Complex wigner_value(const DensityMatrix& rho, double q, double p) {
  rho.validate();
  const Grid1D& g = rho.grid;
  const PhysicalConstants& c = rho.constants;
  const int n = g.count;
  const double rel = (q - g.value(0)) / (0.5 * g.step);
  const double r = std::round(rel);
  if (std::abs(rel - r) > 1e-9 || r < 0.0 || r > 2.0 * (n - 1))
    throw InvalidArgument("q must lie on the half-step center lattice of the position grid");
  const int t2 = static_cast<int>(r);

  Complex sum{0.0, 0.0};
  const auto add = [&](int j, int l) {
    const double xi = (j - l) * g.step;
    sum += std::polar(1.0, -p * xi / c.hbar) * rho.entries(j, l);
  };
  if (t2 % 2 == 0) {
    const int t = t2 / 2;
    const int wmax = std::min(t, n - 1 - t);
    for (int w = -wmax; w <= wmax; ++w) add(t + w, t - w);
  } else {
    const int i = (t2 - 1) / 2;
    const int lo = std::max(-i - 1, i - n + 1), hi = std::min(n - 2 - i, i);
    for (int w = lo; w <= hi; ++w) add(i + w + 1, i - w);
  }
  // One parity family alone samples the xi integral at spacing 2h.
  return conventions::wigner_prefactor(c) * 2.0 * g.step * sum;
}

ComplexField ambiguity_to_wigner(const ComplexField& ambiguity) {
  ambiguity.validate();
  if (ambiguity.kind != FieldKind::ambiguity)
    throw InvalidArgument("ambiguity_to_wigner needs an ambiguity field");
  const PhysicalConstants& c = ambiguity.constants;
  require_conjugate_pair(ambiguity.grid, c);
  const Grid1D& eta = ambiguity.grid.axis1;
  const Grid1D& xi = ambiguity.grid.axis2;
  const Grid1D q = conjugate_grid(eta, c);
  const Grid1D p = conjugate_grid(xi, c);

  CMatrix fq(q.count, eta.count);
  for (int j = 0; j < q.count; ++j)
    for (int a = 0; a < eta.count; ++a)
      fq(j, a) = std::polar(1.0, -eta.value(a) * q.value(j) / c.hbar);
  CMatrix fp(p.count, xi.count);
  for (int b = 0; b < p.count; ++b)
    for (int s = 0; s < xi.count; ++s)
      fp(b, s) = std::polar(1.0, -xi.value(s) * p.value(b) / c.hbar);

  ComplexField out{PhaseGrid{q, p, {"q", "p"}}, CMatrix(), FieldKind::wigner, c};
  out.values = (conventions::bridge_to_wigner_prefactor(c) * eta.step * xi.step) *
               (fq * ambiguity.values * fp.transpose());
  return out;
}

ComplexField wigner_to_ambiguity(const ComplexField& wigner) {
  wigner.validate();
  if (wigner.kind != FieldKind::wigner)
    throw InvalidArgument("wigner_to_ambiguity needs a wigner field");
  const PhysicalConstants& c = wigner.constants;
  require_conjugate_pair(wigner.grid, c);
  const Grid1D& q = wigner.grid.axis1;
  const Grid1D& p = wigner.grid.axis2;
  const Grid1D eta = conjugate_grid(q, c);
  const Grid1D xi = conjugate_grid(p, c);

  CMatrix ge(eta.count, q.count);
  for (int a = 0; a < eta.count; ++a)
    for (int j = 0; j < q.count; ++j)
      ge(a, j) = std::polar(1.0, eta.value(a) * q.value(j) / c.hbar);
  CMatrix gx(xi.count, p.count);
  for (int s = 0; s < xi.count; ++s)
    for (int b = 0; b < p.count; ++b)
      gx(s, b) = std::polar(1.0, xi.value(s) * p.value(b) / c.hbar);

  ComplexField out{PhaseGrid{eta, xi, {"eta", "xi"}}, CMatrix(), FieldKind::ambiguity, c};
  out.values = (conventions::bridge_to_ambiguity_prefactor(c) * q.step * p.step) *
               (ge * wigner.values * gx.transpose());
  return out;
}

Marginal marginal(const ComplexField& ambiguity, MarginalAxis axis) {
  ambiguity.validate();
  if (ambiguity.kind != FieldKind::ambiguity)
    throw InvalidArgument("marginal needs an ambiguity field");
  const double pref = conventions::marginal_prefactor(ambiguity.constants);
  if (axis == MarginalAxis::eta) {
    Marginal m{ambiguity.grid.axis2, CVector(ambiguity.grid.axis2.count)};
    for (int s = 0; s < ambiguity.grid.axis2.count; ++s)
      m.values(s) = pref * ambiguity.grid.axis1.step * ambiguity.values.col(s).sum();
    return m;
  }
  Marginal m{ambiguity.grid.axis1, CVector(ambiguity.grid.axis1.count)};
  for (int a = 0; a < ambiguity.grid.axis1.count; ++a)
    m.values(a) = pref * ambiguity.grid.axis2.step * ambiguity.values.row(a).sum();
  return m;
}

}  // namespace ambiq
