#include "ambiq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ambiq/errors.hpp"
#include "ambiq/fourier.hpp"

namespace ambiq {

namespace {

void require_ambiguity_field(const ComplexField& f, const char* what) {
  f.validate();
  if (f.kind != FieldKind::ambiguity)
    throw InvalidArgument(std::string(what) + " requires an ambiguity-kind field");
}

void require_stepping(double dt, int steps) {
  if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
  if (steps < 1) throw InvalidArgument("step count must be at least 1");
}

// Guards the circular wrap of the per-row spectral shear: every row's
// significant support, shifted by its row delta, must stay on the xi axis.
void check_shear_support(const ComplexField& p, const RVector& delta_samples) {
  const int rows = p.grid.axis1.count;
  const int cols = p.grid.axis2.count;
  const double peak = max_abs(p.values);
  if (peak == 0.0) return;
  const double eps = 1e-9 * peak;
  for (int i = 0; i < rows; ++i) {
    int lo = -1;
    int hi = -1;
    for (int j = 0; j < cols; ++j)
      if (std::abs(p.values(i, j)) > eps) {
        if (lo < 0) lo = j;
        hi = j;
      }
    if (lo < 0) continue;
    const double shifted_lo = static_cast<double>(lo) - delta_samples[i];
    const double shifted_hi = static_cast<double>(hi) - delta_samples[i];
    if (shifted_lo < -0.5 || shifted_hi > static_cast<double>(cols - 1) + 0.5)
      throw DomainOverflow("shear moves row support past the xi boundary");
  }
}

// d/dt P = (eta/m) dP/dxi + (i F xi / hbar) P, evaluated into a fresh matrix.
CMatrix const_force_rhs(const CMatrix& p, const PhaseGrid& grid,
                        const ConstantForceParams& params, double hbar) {
  CMatrix d = p;
  spectral_derivative_axis2(d, grid.axis2.step);
  CMatrix out(p.rows(), p.cols());
  for (int i = 0; i < grid.axis1.count; ++i) {
    const double advect = grid.axis1.value(i) / params.mass;
    for (int j = 0; j < grid.axis2.count; ++j) {
      const Complex phase(0.0, params.force * grid.axis2.value(j) / hbar);
      out(i, j) = advect * d(i, j) + phase * p(i, j);
    }
  }
  return out;
}

// Catmull-Rom weights for the fractional position t in [0, 1).
void catmull_rom(double t, double w[4]) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  w[0] = 0.5 * (-t3 + 2.0 * t2 - t);
  w[1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
  w[2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
  w[3] = 0.5 * (t3 - t2);
}

}  // namespace

void ConstantForceParams::validate() const {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  if (!std::isfinite(force)) throw InvalidArgument("force must be finite");
}

Complex EvolvedClosedForm::value(double eta, double xi) const {
  const double hbar = initial.constants.hbar;
  const double shear = eta * time / params.mass;
  const double phase = params.force * time * (2.0 * xi + shear) / (2.0 * hbar);
  return std::polar(1.0, phase) * initial.value(eta, xi + shear);
}

ComplexField EvolvedClosedForm::sample(const PhaseGrid& grid) const {
  ComplexField f{grid, CMatrix(grid.axis1.count, grid.axis2.count), FieldKind::ambiguity,
                 initial.constants};
  for (int i = 0; i < grid.axis1.count; ++i)
    for (int j = 0; j < grid.axis2.count; ++j)
      f.values(i, j) = value(grid.axis1.value(i), grid.axis2.value(j));
  return f;
}

EvolvedClosedForm evolve_const_force_closed(const AmbiguityClosedFormGaussian& p0,
                                            const ConstantForceParams& params, double t) {
  params.validate();
  return EvolvedClosedForm{p0, params, t};
}

ComplexField evolve_const_force_closed(const ComplexField& p0,
                                       const ConstantForceParams& params, double t) {
  require_ambiguity_field(p0, "evolve_const_force_closed");
  params.validate();
  if (t == 0.0) return p0;

  const double hbar = p0.constants.hbar;
  RVector deltas(p0.grid.axis1.count);
  for (int i = 0; i < p0.grid.axis1.count; ++i)
    deltas[i] = p0.grid.axis1.value(i) * t / (params.mass * p0.grid.axis2.step);
  check_shear_support(p0, deltas);

  ComplexField out = p0;
  spectral_shift_axis2(out.values, deltas);
  for (int i = 0; i < out.grid.axis1.count; ++i) {
    const double shear = out.grid.axis1.value(i) * t / params.mass;
    for (int j = 0; j < out.grid.axis2.count; ++j) {
      const double phase =
          params.force * t * (2.0 * out.grid.axis2.value(j) + shear) / (2.0 * hbar);
      out.values(i, j) *= std::polar(1.0, phase);
    }
  }
  return out;
}

ComplexField evolve_generator_const_force(const ComplexField& p, const ConstantForceParams& params,
                                          double dt, int steps) {
  require_ambiguity_field(p, "evolve_generator_const_force");
  params.validate();
  require_stepping(dt, steps);

  const double hbar = p.constants.hbar;
  const Grid1D& g1 = p.grid.axis1;
  const Grid1D& g2 = p.grid.axis2;
  const double max_eta = std::max(std::abs(g1.min()), std::abs(g1.max()));
  const double max_xi = std::max(std::abs(g2.min()), std::abs(g2.max()));
  const double rate = max_eta * kPi / (params.mass * g2.step) +
                      std::abs(params.force) * max_xi / hbar;
  if (dt * rate > 2.8)
    throw InvalidArgument(
        "time step exceeds the spectral stability bound dt * rate <= 2.8 for RK4");

  const double initial_peak = max_abs(p.values);
  ComplexField out = p;
  for (int s = 0; s < steps; ++s) {
    const CMatrix k1 = const_force_rhs(out.values, p.grid, params, hbar);
    const CMatrix k2 =
        const_force_rhs(out.values + (0.5 * dt) * k1, p.grid, params, hbar);
    const CMatrix k3 =
        const_force_rhs(out.values + (0.5 * dt) * k2, p.grid, params, hbar);
    const CMatrix k4 = const_force_rhs(out.values + dt * k3, p.grid, params, hbar);
    out.values += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (initial_peak > 0.0 && max_abs(out.values) > 10.0 * initial_peak)
      throw NumericalInstability("field norm grew beyond 10x its initial peak");
  }
  return out;
}

namespace {

// Zeroes every row (axis1) and column (axis2) whose mirror image falls off
// the grid -- the unpaired extreme samples of even-count anchored axes.  The
// sine quadrature must run over a reflection-symmetric band, otherwise those
// samples enter the sum without their Hermitian partners and the evolution
// loses the A(-eta,-xi) = conj A(eta,xi) symmetry.  The derivative is confined
// to the same band on the output side, so the unpaired boundary samples hold
// their initial content instead of accumulating one-sided quadrature noise.
void restrict_to_paired_band(CMatrix& m, const PhaseGrid& grid) {
  for (int i = 0; i < grid.axis1.count; ++i)
    if (grid.axis1.reflect(i) < 0) m.row(i).setZero();
  for (int j = 0; j < grid.axis2.count; ++j)
    if (grid.axis2.reflect(j) < 0) m.col(j).setZero();
}

// Right-hand side of the sine-kernel evolution.  On conjugate-pair grids the
// sine argument is pi/N times an integer, so the inner loop walks a
// precomputed table; otherwise the sine is evaluated directly.
class KernelRhs {
 public:
  KernelRhs(const PhaseGrid& grid, const CMatrix& h, double hbar, double sign)
      : grid_(grid), h_(h) {
    restrict_to_paired_band(h_, grid);
    n1_ = grid.axis1.count;
    n2_ = grid.axis2.count;
    o1_ = grid.axis1.origin();
    o2_ = grid.axis2.origin();
    coef_ = sign * 2.0 / (hbar * std::sqrt(2.0 * kPi * hbar)) * grid.axis1.step *
            grid.axis2.step;
    const double pair = grid.axis1.step * grid.axis2.step * static_cast<double>(n1_);
    lattice_ = n1_ == n2_ && o1_ >= 0 && o2_ >= 0 &&
               std::abs(pair - 2.0 * kPi * hbar) <= 1e-9 * 2.0 * kPi * hbar;
    if (lattice_) {
      sine_.resize(static_cast<std::size_t>(2 * n1_));
      for (int m = 0; m < 2 * n1_; ++m)
        sine_[static_cast<std::size_t>(m)] = std::sin(kPi * static_cast<double>(m) /
                                                      static_cast<double>(n1_));
    } else {
      half_inv_hbar_ = 0.5 / hbar;
    }
  }

  CMatrix operator()(const CMatrix& p_raw) const {
    CMatrix p = p_raw;
    restrict_to_paired_band(p, grid_);
    CMatrix out = CMatrix::Zero(n1_, n2_);
    for (int i = 0; i < n1_; ++i) {
      if (grid_.axis1.reflect(i) < 0) continue;
      const int ci = i - o1_;
      const int alo = std::max(0, i + o1_ - n1_ + 1);
      const int ahi = std::min(n1_ - 1, i + o1_);
      for (int j = 0; j < n2_; ++j) {
        if (grid_.axis2.reflect(j) < 0) continue;
        const int cj = j - o2_;
        const int blo = std::max(0, j + o2_ - n2_ + 1);
        const int bhi = std::min(n2_ - 1, j + o2_);
        Complex acc(0.0, 0.0);
        if (lattice_) {
          const int period = 2 * n1_;
          const int step = ((ci % period) + period) % period;
          for (int a = alo; a <= ahi; ++a) {
            const int pa = i - a + o1_;
            long first = static_cast<long>(ci) * (blo - o2_) -
                         static_cast<long>(a - o1_) * cj;
            int m = static_cast<int>(((first % period) + period) % period);
            for (int b = blo; b <= bhi; ++b) {
              acc += sine_[static_cast<std::size_t>(m)] * h_(a, b) * p(pa, j - b + o2_);
              m += step;
              if (m >= period) m -= period;
            }
          }
        } else {
          const double eta = grid_.axis1.value(i);
          const double xi = grid_.axis2.value(j);
          for (int a = alo; a <= ahi; ++a) {
            const int pa = i - a + o1_;
            const double etap = grid_.axis1.value(a);
            for (int b = blo; b <= bhi; ++b) {
              const double xip = grid_.axis2.value(b);
              acc += std::sin((eta * xip - etap * xi) * half_inv_hbar_) * h_(a, b) *
                     p(pa, j - b + o2_);
            }
          }
        }
        out(i, j) = coef_ * acc;
      }
    }
    return out;
  }

 private:
  const PhaseGrid& grid_;
  CMatrix h_;
  int n1_ = 0, n2_ = 0, o1_ = -1, o2_ = -1;
  double coef_ = 0.0;
  double half_inv_hbar_ = 0.0;
  bool lattice_ = false;
  std::vector<double> sine_;
};

}  // namespace

ComplexField evolve_kernel(const ComplexField& p, const ComplexField& h, double dt, int steps,
                           KernelDirection direction) {
  require_ambiguity_field(p, "evolve_kernel");
  require_ambiguity_field(h, "evolve_kernel");
  if (!same_phase_grid(p.grid, h.grid))
    throw InvalidArgument("evolve_kernel requires the state and Hamiltonian on one grid");
  require_stepping(dt, steps);

  const double sign = direction == KernelDirection::state ? 1.0 : -1.0;
  const KernelRhs rhs(p.grid, h.values, p.constants.hbar, sign);

  const double initial_peak = max_abs(p.values);
  ComplexField out = p;
  for (int s = 0; s < steps; ++s) {
    const CMatrix k1 = rhs(out.values);
    const CMatrix k2 = rhs(out.values + (0.5 * dt) * k1);
    const CMatrix k3 = rhs(out.values + (0.5 * dt) * k2);
    const CMatrix k4 = rhs(out.values + dt * k3);
    out.values += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (initial_peak > 0.0 && max_abs(out.values) > 10.0 * initial_peak)
      throw NumericalInstability("field norm grew beyond 10x its initial peak");
  }
  return out;
}

ComplexField evolve_linear_canonical(const ComplexField& a, const LinearCanonicalMap& map) {
  require_ambiguity_field(a, "evolve_linear_canonical");
  if (std::abs(map.determinant() - 1.0) > 1e-9)
    throw InvalidArgument("canonical map must have unit determinant");

  const Grid1D& g1 = a.grid.axis1;
  const Grid1D& g2 = a.grid.axis2;
  ComplexField out = a;
  for (int i = 0; i < g1.count; ++i) {
    const double eta = g1.value(i);
    for (int j = 0; j < g2.count; ++j) {
      const double xi = g2.value(j);
      const double src1 = map.alpha * eta + map.gamma * xi;
      const double src2 = map.beta * eta + map.delta * xi;
      const double f1 = src1 / g1.step + g1.origin_index;
      const double f2 = src2 / g2.step + g2.origin_index;
      const int base1 = static_cast<int>(std::floor(f1));
      const int base2 = static_cast<int>(std::floor(f2));
      double w1[4];
      double w2[4];
      catmull_rom(f1 - static_cast<double>(base1), w1);
      catmull_rom(f2 - static_cast<double>(base2), w2);
      Complex acc(0.0, 0.0);
      for (int r = 0; r < 4; ++r) {
        const int s1 = base1 - 1 + r;
        if (s1 < 0 || s1 >= g1.count || w1[r] == 0.0) continue;
        for (int t = 0; t < 4; ++t) {
          const int s2 = base2 - 1 + t;
          if (s2 < 0 || s2 >= g2.count) continue;
          acc += w1[r] * w2[t] * a.values(s1, s2);
        }
      }
      out.values(i, j) = acc;
    }
  }
  return out;
}

}  // namespace ambiq
