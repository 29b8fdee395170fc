#include "ambiq/fourier.hpp"

#include <fftw3.h>

#include <cmath>

#include "ambiq/errors.hpp"

namespace ambiq {

CMatrix unitary_dft(const Grid1D& position, const Grid1D& wavenumber, const PhysicalConstants& c) {
  position.validate();
  wavenumber.validate();
  const int n = position.count;
  if (wavenumber.count != n) throw InvalidArgument("unitary_dft: axis sizes differ");
  const double product = position.step * wavenumber.step * static_cast<double>(n);
  if (std::abs(product - 2.0 * kPi * c.hbar) > 1e-9 * 2.0 * kPi * c.hbar)
    throw InvalidArgument("unitary_dft: wavenumber grid is not conjugate to the position grid");
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int a = 0; a < n; ++a) {
    const double k = wavenumber.value(a);
    for (int j = 0; j < n; ++j)
      f(a, j) = std::polar(scale, -k * position.value(j) / c.hbar);
  }
  return f;
}

BatchedDft::BatchedDft(int rows, int cols, bool along_axis2) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("BatchedDft: empty matrix");
  n_ = along_axis2 ? cols : rows;
  const int howmany = along_axis2 ? rows : cols;
  const int stride = along_axis2 ? 1 : cols;
  const int dist = along_axis2 ? cols : 1;
  CMatrix scratch(rows, cols);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_fwd_ = fftw_plan_many_dft(1, &n_, howmany, buf, nullptr, stride, dist, buf, nullptr, stride,
                                 dist, FFTW_FORWARD, flags);
  plan_inv_ = fftw_plan_many_dft(1, &n_, howmany, buf, nullptr, stride, dist, buf, nullptr, stride,
                                 dist, FFTW_BACKWARD, flags);
}

BatchedDft::~BatchedDft() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void BatchedDft::forward(CMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw InvalidArgument("BatchedDft: shape mismatch");
  auto* buf = reinterpret_cast<fftw_complex*>(m.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), buf, buf);
}

void BatchedDft::inverse(CMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw InvalidArgument("BatchedDft: shape mismatch");
  auto* buf = reinterpret_cast<fftw_complex*>(m.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), buf, buf);
}

namespace {

// Signed FFT bin frequency; the even-length Nyquist bin reports n/2 and is
// special-cased by callers.
int signed_bin(int k, int n) { return (2 * k > n) ? k - n : k; }

void derivative_along(CMatrix& f, double step, bool along_axis2) {
  const int rows = static_cast<int>(f.rows());
  const int cols = static_cast<int>(f.cols());
  const int n = along_axis2 ? cols : rows;
  if (n < 8) throw InvalidArgument("spectral derivative needs at least 8 samples");
  BatchedDft dft(rows, cols, along_axis2);
  dft.forward(f);
  const double unit = 2.0 * kPi / (static_cast<double>(n) * step);
  for (int k = 0; k < n; ++k) {
    const bool nyquist = (n % 2 == 0) && (k == n / 2);
    const Complex mult = nyquist ? Complex(0.0, 0.0)
                                 : Complex(0.0, unit * static_cast<double>(signed_bin(k, n)));
    if (along_axis2)
      f.col(k) *= mult;
    else
      f.row(k) *= mult;
  }
  dft.inverse(f);
  f *= 1.0 / static_cast<double>(n);
}

}  // namespace

void spectral_derivative_axis1(CMatrix& f, double step) { derivative_along(f, step, false); }
void spectral_derivative_axis2(CMatrix& f, double step) { derivative_along(f, step, true); }

void spectral_shift_axis2(CMatrix& f, const RVector& delta_samples) {
  const int rows = static_cast<int>(f.rows());
  const int cols = static_cast<int>(f.cols());
  if (delta_samples.size() != rows) throw InvalidArgument("spectral_shift_axis2: delta size");
  BatchedDft dft(rows, cols, true);
  dft.forward(f);
  for (int r = 0; r < rows; ++r) {
    const double d = delta_samples[r];
    for (int k = 0; k < cols; ++k) {
      const bool nyquist = (cols % 2 == 0) && (k == cols / 2);
      const double angle = 2.0 * kPi * static_cast<double>(signed_bin(k, cols)) * d /
                           static_cast<double>(cols);
      const Complex mult = nyquist ? Complex(std::cos(kPi * d), 0.0) : std::polar(1.0, angle);
      f(r, k) *= mult;
    }
  }
  dft.inverse(f);
  f *= 1.0 / static_cast<double>(cols);
}

void spectral_shift_axis1(CMatrix& f, double delta_samples) {
  const int rows = static_cast<int>(f.rows());
  const int cols = static_cast<int>(f.cols());
  BatchedDft dft(rows, cols, false);
  dft.forward(f);
  for (int k = 0; k < rows; ++k) {
    const bool nyquist = (rows % 2 == 0) && (k == rows / 2);
    const double angle = 2.0 * kPi * static_cast<double>(signed_bin(k, rows)) * delta_samples /
                         static_cast<double>(rows);
    const Complex mult =
        nyquist ? Complex(std::cos(kPi * delta_samples), 0.0) : std::polar(1.0, angle);
    f.row(k) *= mult;
  }
  dft.inverse(f);
  f *= 1.0 / static_cast<double>(rows);
}

namespace {

// Fornberg's recursion for finite-difference weights of derivatives up to
// order m at 0 on the given nodes.
std::vector<double> fornberg_weights(const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
              c1 *
              (static_cast<double>(k) * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
               c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) /
              c2;
        c[static_cast<std::size_t>(i)][0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
             static_cast<double>(k) * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) /
            c3;
      c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
  return w;
}

}  // namespace

std::vector<double> central_difference_weights(int derivative, double step) {
  if (derivative < 0) throw InvalidArgument("derivative order must be non-negative");
  if (!(step > 0.0)) throw InvalidArgument("stencil step must be positive");
  if (derivative == 0) return {1.0};
  const int points = (derivative <= 2) ? 5 : (derivative <= 4 ? 7 : 2 * ((derivative + 4) / 2) + 1);
  const int half = points / 2;
  std::vector<double> nodes(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    nodes[static_cast<std::size_t>(i)] = static_cast<double>(i - half) * step;
  return fornberg_weights(nodes, derivative);
}

}  // namespace ambiq
