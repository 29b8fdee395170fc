#pragma once

#include <memory>
#include <vector>

#include "ambiq/grid.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Unitary centered discrete Fourier matrix F[a,j] = exp(-i k_a q_j / hbar) / sqrt(N)
// mapping position-grid coefficients to wavenumber-grid coefficients.
// Unitarity requires the wavenumber grid to be conjugate to the position grid.
CMatrix unitary_dft(const Grid1D& position, const Grid1D& wavenumber, const PhysicalConstants& c);

// Batched in-place 1-D FFTs over one axis of a row-major complex matrix.
// Transforms are unnormalized (forward then inverse multiplies by n).
class BatchedDft {
public:
  // Transform along axis2 (rows contiguous) when along_axis2, else along axis1.
  BatchedDft(int rows, int cols, bool along_axis2);
  ~BatchedDft();
  BatchedDft(const BatchedDft&) = delete;
  BatchedDft& operator=(const BatchedDft&) = delete;

  void forward(CMatrix& m) const;
  void inverse(CMatrix& m) const;
  int transform_length() const { return n_; }

private:
  int rows_, cols_, n_;
  void* plan_fwd_;
  void* plan_inv_;
};

// In-place spectral (trigonometric) derivative along one axis of a field
// sampled with the given step. The Nyquist mode of an even-length axis is
// zeroed, the symmetric choice that keeps real inputs real.
void spectral_derivative_axis1(CMatrix& f, double step);
void spectral_derivative_axis2(CMatrix& f, double step);

// In-place circular shift of every row by delta[r] samples (fractional allowed,
// trigonometric interpolation); y[j] = x[j + delta]. The Nyquist mode uses the
// symmetric cos(pi*delta) weight, exact for integer shifts.
void spectral_shift_axis2(CMatrix& f, const RVector& delta_samples);

// Same shift applied to every column of f along axis1 with a common delta.
void spectral_shift_axis1(CMatrix& f, double delta_samples);

// Central finite-difference weights for the given derivative order on nodes
// {-p..p}*step chosen for 4th-order accuracy (5 points for orders <= 2,
// 7 points for orders 3-4, wider for higher orders).
std::vector<double> central_difference_weights(int derivative, double step);

}  // namespace ambiq
