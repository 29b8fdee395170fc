#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ambiq/ambiguity.hpp"
#include "ambiq/constants.hpp"
#include "ambiq/field.hpp"
#include "ambiq/oracle.hpp"
#include "ambiq/types.hpp"

namespace ambiq {

// Alphabet of the operator words: position and momentum.
enum class Letter { Q, P };

struct PolynomialTerm {
  Complex coeff;
  std::vector<Letter> word;  // left-to-right operator product
};

// Finite sum of words in {Q, P} with complex coefficients.  An empty word is
// the identity, so a bare coefficient is a multiple of the identity operator.
struct PolynomialOperator {
  std::vector<PolynomialTerm> terms;

  // Largest word length among terms that survive combining duplicates.
  int degree() const;

  // True iff reversing every word and conjugating every coefficient maps the
  // combined term set onto itself (q-hat and p-hat are individually
  // Hermitian, so reversal is the word-level adjoint).
  bool is_hermitian() const;

  // Duplicate words merged, exact-zero coefficients dropped.
  PolynomialOperator combined() const;
};

// Parses a compact text syntax.  Terms are separated by top-level '+'/'-';
// each term is an optional decimal coefficient and a product of letters with
// optional integer powers, joined by '*' or whitespace:
//   "0.5*P^2 - 3*Q"    "Q P Q"    "QP"    "2"    "-Q^3 + 1.5"
// Letters are case-insensitive.  Throws InvalidArgument on anything else.
PolynomialOperator parse_operator(const std::string& text);

std::string to_string(const PolynomialOperator& op);

// Coefficient table of a distribution sum(a,b) table[(a,b)] * d^a/d eta^a
// d^b/d xi^b delta(eta) delta(xi): the ambiguity function of a polynomial
// operator.  The sqrt(2 pi hbar) normalization of the identity's ambiguity
// function is folded into the coefficients.
struct DifferentialDescriptor {
  std::map<std::pair<int, int>, Complex> table;

  int max_eta_order() const;
  int max_xi_order() const;
};

// Applies the phase-space image of a single operator letter to a sampled
// ambiguity field:
//   Q: ((hbar/i) d/d eta + xi/2) . A   -- the ambiguity of q-hat * rho
//   P: ((hbar/i) d/d xi  - eta/2) . A  -- the ambiguity of p-hat * rho
// Derivatives are spectral, so the field must be well resolved and at least
// 8 samples wide on each axis (InvalidArgument otherwise).
ComplexField bopp_apply(const ComplexField& field, Letter letter);

// Symbolically applies the operator's word (rightmost letter first) to the
// identity's ambiguity function sqrt(2 pi hbar) delta(eta) delta(xi), using
//   xi * delta^(b)(xi) = -b delta^(b-1)(xi)
// and its eta counterpart to keep the result a pure derivative-of-delta sum.
// Exact in exact arithmetic; no grids involved.
DifferentialDescriptor compile_descriptor(const PolynomialOperator& op,
                                          const PhysicalConstants& c);

// <op> = Tr(rho op) evaluated without quadrature: pairs the compiled
// descriptor with derivatives of the state's ambiguity function at the
// origin.  The reflection of the trace-product rule and the parts-integration
// signs each contribute (-1)^(a+b), so they cancel and the result is
//   sum(a,b) table[(a,b)] * (d/d eta)^a (d/d xi)^b A(0,0).
// Grid fields use 4th-order central difference stencils with the grid step;
// a stencil that does not fit around the origin is an InvalidArgument.
Complex expectation_polynomial(const ComplexField& field, const PolynomialOperator& op);

// Same pairing with exact analytic derivatives of a closed-form Gaussian
// ambiguity function: no grid, no stencil error.
Complex expectation_polynomial(const AmbiguityClosedFormGaussian& closed,
                               const PolynomialOperator& op);

// Trace-product quadrature Tr(A B) = integral dEta dXi A(eta,xi)*B(-eta,-xi)
// as a Riemann sum over reflection-paired samples.  Both fields must live on
// the same ambiguity grid; the unpaired extreme row/column of an even-count
// axis is dropped (the integrand there is beyond the reflection-symmetric
// band, negligible for resolved fields).
Complex trace_product(const ComplexField& a, const ComplexField& b);

// Grid rendering of a descriptor: the stencil weights of every table entry
// are scattered (reflected, scaled by 1/(step1*step2)) around the origin so
// that trace_product(A, descriptor_field(...)) reproduces
// expectation_polynomial(A, op) exactly, stencil and all.  The grid must be
// an ambiguity grid whose axes can hold the reflected stencils.
ComplexField descriptor_field(const DifferentialDescriptor& d, const PhaseGrid& grid,
                              const PhysicalConstants& c);

// Dense position-grid matrix of the operator: words become products of the
// oracle q-hat / p-hat matrices, left to right.  Reference route for testing
// the descriptor machinery against plain traces.
OperatorMatrix polynomial_operator_matrix(const PolynomialOperator& op, const Grid1D& grid,
                                          const PhysicalConstants& c);

}  // namespace ambiq
