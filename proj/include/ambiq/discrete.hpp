#pragma once

#include "ambiq/types.hpp"

namespace ambiq {

// Finite-dimensional displacement D(m,n) = tau^{m*n} X^m Z^n on C^d, with
// omega = e^{2*pi*i/d}, tau = e^{i*pi/d} (so tau^2 = omega), X the cyclic
// shift X|j> = |j+1 mod d> and Z the clock Z|j> = omega^j |j>.  The symmetric
// tau^{m*n} factor plays the role the Campbell-Baker-Hausdorff phase plays for
// the continuum displacement, which makes D(m,n)^dagger land back on the
// family: D(m,n)^dagger = s * D(-m,-n) with s = +-1 fixed by index wraparound
// (computed by the identity report, never assumed).
//
// Indices act mod d and negative inputs are normalized on construction, so
// the stored (m, n) always lie in 0..d-1.
struct DiscreteDisplacement {
  int dim = 0;
  int m = 0;
  int n = 0;
  CMatrix matrix;
};

DiscreteDisplacement discrete_displacement(int dim, int m, int n);

// Coefficient table of a d x d matrix A over the orthogonal displacement
// basis {D(m,n)/sqrt(d)}: table(m,n) = Tr{A * D(m,n)^dagger} / sqrt(d).
// Parseval holds exactly: sum |table|^2 = Tr{A^dagger A}.
struct DiscreteAmbiguity {
  int dim = 0;
  CMatrix table;
};

DiscreteAmbiguity discrete_ambiguity(const CMatrix& a);

// Inverse of discrete_ambiguity: A = sum_{m,n} table(m,n) * D(m,n) / sqrt(d).
CMatrix reconstruct_discrete(const DiscreteAmbiguity& t);

// sum_{m,n} TA(m,n) * conj(TB(m,n)) = Tr{A * B^dagger}.  For Hermitian B this
// is Tr{A B}.
Complex discrete_trace_product(const DiscreteAmbiguity& ta, const DiscreteAmbiguity& tb);

// Exhaustive check of the exact displacement-basis identities at dimension d.
// Every error field is the worst absolute deviation over all index
// combinations (all pairs, all conjugation targets, every matrix entry):
//
//   unitarity        D(m,n) D(m,n)^dagger = 1
//   orthogonality    Tr{D(m,n) D(m',n')^dagger} = d * delta_{mm'} delta_{nn'}
//   composition      D(m1,n1) D(m2,n2) = tau^{n1 m2 - m1 n2} * s * D(m1+m2, n1+n2),
//                    indices reduced mod d; s = +-1 is the wraparound sign
//                    (-1)^{kn(m1+m2) + km(n1+n2) + d km kn} where km, kn flag
//                    the index reductions
//   parity           sum over the doubled index torus m,n in [0, 2d) of
//                    D(m,n) / (2d) = reflection |j> -> |-j mod d>.  The tau
//                    phases have period 2d in each index, so only the doubled
//                    range resolves the reflection; over a single period the
//                    sum is not a permutation.
//   conjugation      D(m,n) D(a,b) D(m,n)^dagger = omega^{n a - m b} D(a,b)
//   adjoint pairing  D(m,n)^dagger = +-D(-m,-n), sign computed per pair and
//                    reported through negative_adjoint_pairs
struct IdentityReport {
  int dim = 0;
  double tolerance = 0.0;
  double unitarity_error = 0.0;
  double orthogonality_error = 0.0;
  double composition_error = 0.0;
  double parity_error = 0.0;
  double conjugation_error = 0.0;
  double adjoint_pairing_error = 0.0;
  int negative_adjoint_pairs = 0;
  bool all_ok = false;

  bool unitarity_ok() const { return unitarity_error <= tolerance; }
  bool orthogonality_ok() const { return orthogonality_error <= tolerance; }
  bool composition_ok() const { return composition_error <= tolerance; }
  bool parity_ok() const { return parity_error <= tolerance; }
  bool conjugation_ok() const { return conjugation_error <= tolerance; }
  bool adjoint_pairing_ok() const { return adjoint_pairing_error <= tolerance; }
};

IdentityReport verify_discrete_identities(int dim, double tolerance = 1e-12);

}  // namespace ambiq
