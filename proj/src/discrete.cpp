#include "ambiq/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ambiq/errors.hpp"

namespace ambiq {

namespace {

int normalize_index(int k, int d) { return ((k % d) + d) % d; }

// Phase table tau^e for e in [0, 2d): every entry of every displacement is
// one lookup, tau^{m*n + 2*n*c mod 2d}, so products and comparisons across
// the whole family stay consistent to a few ulp.
std::vector<Complex> tau_powers(int d) {
  std::vector<Complex> tau(static_cast<std::size_t>(2 * d));
  for (int e = 0; e < 2 * d; ++e)
    tau[static_cast<std::size_t>(e)] =
        std::polar(1.0, kPi * static_cast<double>(e) / static_cast<double>(d));
  return tau;
}

// D(m,n) is a generalized permutation matrix: column c holds its single
// nonzero at row (c+m) mod d with value tau^{m*n} omega^{n*c}.
struct SparseDisplacement {
  int offset = 0;
  CVector entries;
};

SparseDisplacement sparse_displacement(int d, int m, int n, const std::vector<Complex>& tau) {
  SparseDisplacement s;
  s.offset = normalize_index(m, d);
  s.entries.resize(d);
  const int mm = normalize_index(m, d);
  const int nn = normalize_index(n, d);
  for (int c = 0; c < d; ++c)
    s.entries(c) = tau[static_cast<std::size_t>((mm * nn + 2 * nn * c) % (2 * d))];
  return s;
}

void require_dim(int d) {
  if (d < 2) throw InvalidArgument("displacement basis needs dimension >= 2");
}

}  // namespace

DiscreteDisplacement discrete_displacement(int dim, int m, int n) {
  require_dim(dim);
  DiscreteDisplacement out;
  out.dim = dim;
  out.m = normalize_index(m, dim);
  out.n = normalize_index(n, dim);
  const SparseDisplacement s = sparse_displacement(dim, out.m, out.n, tau_powers(dim));
  out.matrix = CMatrix::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) out.matrix((c + s.offset) % dim, c) = s.entries(c);
  return out;
}

DiscreteAmbiguity discrete_ambiguity(const CMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("displacement expansion needs a square matrix");
  const int d = static_cast<int>(a.rows());
  require_dim(d);
  const std::vector<Complex> tau = tau_powers(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  DiscreteAmbiguity out;
  out.dim = d;
  out.table.resize(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const SparseDisplacement s = sparse_displacement(d, m, n, tau);
      Complex acc(0.0, 0.0);
      for (int c = 0; c < d; ++c) acc += a((c + m) % d, c) * std::conj(s.entries(c));
      out.table(m, n) = acc * scale;
    }
  return out;
}

CMatrix reconstruct_discrete(const DiscreteAmbiguity& t) {
  require_dim(t.dim);
  if (t.table.rows() != t.dim || t.table.cols() != t.dim)
    throw InvalidArgument("coefficient table shape does not match its dimension");
  const int d = t.dim;
  const std::vector<Complex> tau = tau_powers(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix a = CMatrix::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const SparseDisplacement s = sparse_displacement(d, m, n, tau);
      const Complex w = t.table(m, n) * scale;
      for (int c = 0; c < d; ++c) a((c + m) % d, c) += w * s.entries(c);
    }
  return a;
}

Complex discrete_trace_product(const DiscreteAmbiguity& ta, const DiscreteAmbiguity& tb) {
  if (ta.dim != tb.dim) throw InvalidArgument("trace product needs equal dimensions");
  Complex acc(0.0, 0.0);
  for (int m = 0; m < ta.dim; ++m)
    for (int n = 0; n < ta.dim; ++n) acc += ta.table(m, n) * std::conj(tb.table(m, n));
  return acc;
}

IdentityReport verify_discrete_identities(int dim, double tolerance) {
  require_dim(dim);
  const int d = dim;
  const std::vector<Complex> tau = tau_powers(d);

  std::vector<SparseDisplacement> fam;
  fam.reserve(static_cast<std::size_t>(d * d));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) fam.push_back(sparse_displacement(d, m, n, tau));
  const auto at = [&](int m, int n) -> const SparseDisplacement& {
    return fam[static_cast<std::size_t>(m * d + n)];
  };

  IdentityReport rep;
  rep.dim = d;
  rep.tolerance = tolerance;

  // Unitarity.  Each column carries a single nonzero at a distinct row, so
  // the off-diagonal of D D^dagger vanishes structurally and the diagonal is
  // the squared entry magnitudes.
  for (const SparseDisplacement& s : fam)
    for (int c = 0; c < d; ++c)
      rep.unitarity_error =
          std::max(rep.unitarity_error, std::abs(std::norm(s.entries(c)) - 1.0));

  // Orthogonality over all pairs.  Two displacements with different shift
  // offsets have disjoint nonzero patterns, so their trace pairing is an
  // exact zero; equal offsets reduce to a phase sum over the d columns.
  for (int m = 0; m < d; ++m)
    for (int n1 = 0; n1 < d; ++n1)
      for (int n2 = 0; n2 < d; ++n2) {
        const SparseDisplacement& s1 = at(m, n1);
        const SparseDisplacement& s2 = at(m, n2);
        const Complex tr = (s1.entries.array() * s2.entries.array().conjugate()).sum();
        const double expected = n1 == n2 ? static_cast<double>(d) : 0.0;
        rep.orthogonality_error = std::max(rep.orthogonality_error, std::abs(tr - expected));
      }

  // Cyclic rotation out(c) = v((c + k) mod d), vectorized as two segments.
  const auto rotate_into = [d](const CVector& v, int k, CVector& out) {
    out.head(d - k) = v.segment(k, d - k);
    out.tail(k) = v.head(k);
  };

  // Composition over all pairs, entry by entry.  The scan is O(d^5), so the
  // inner comparison tracks the squared defect through raw pointers and takes
  // a single square root at the end.
  CVector rot(d);
  double comp2 = 0.0;
  for (int m1 = 0; m1 < d; ++m1)
    for (int n1 = 0; n1 < d; ++n1) {
      const SparseDisplacement& s1 = at(m1, n1);
      for (int m2 = 0; m2 < d; ++m2) {
        rotate_into(s1.entries, m2, rot);
        const Complex* pr = rot.data();
        const int m3 = (m1 + m2) % d;
        const int km = m1 + m2 >= d ? 1 : 0;
        for (int n2 = 0; n2 < d; ++n2) {
          const Complex* p2 = at(m2, n2).entries.data();
          const Complex* p3 = at(m3, (n1 + n2) % d).entries.data();
          const int kn = n1 + n2 >= d ? 1 : 0;
          const int sign_exp = kn * (m1 + m2) + km * (n1 + n2) + d * km * kn;
          const double sign = sign_exp % 2 == 0 ? 1.0 : -1.0;
          const int phase_exp = normalize_index(n1 * m2 - m1 * n2, 2 * d);
          const Complex phase = sign * tau[static_cast<std::size_t>(phase_exp)];
          for (int c = 0; c < d; ++c)
            comp2 = std::max(comp2, std::norm(pr[c] * p2[c] - phase * p3[c]));
        }
      }
    }
  rep.composition_error = std::sqrt(comp2);

  // Parity: the tau phases repeat only after 2d steps in each index, so the
  // sum that resolves the reflection runs over the doubled torus.
  CMatrix parity = CMatrix::Zero(d, d);
  for (int m = 0; m < 2 * d; ++m)
    for (int n = 0; n < 2 * d; ++n)
      for (int c = 0; c < d; ++c)
        parity((c + m) % d, c) += tau[static_cast<std::size_t>((m * n + 2 * n * c) % (2 * d))];
  parity /= 2.0 * static_cast<double>(d);
  for (int j = 0; j < d; ++j) parity((d - j) % d, j) -= 1.0;
  rep.parity_error = parity.cwiseAbs().maxCoeff();

  // Conjugation of every family member by every family member.  Comparing
  // column (c + m) mod d of both sides turns the sandwich into per-column
  // products of the three single nonzeros:
  //   lhs(c) = s((c+a) mod d) * conj(s(c)) * t(c)   vs   phase * t((c+m) mod d).
  // The right side reads t at a rotated index, handled as two contiguous runs.
  CVector gain(d);
  double conj2 = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const SparseDisplacement& s = at(m, n);
      for (int a = 0; a < d; ++a) {
        rotate_into(s.entries, a, rot);
        gain = rot.cwiseProduct(s.entries.conjugate());
        const Complex* pg = gain.data();
        for (int b = 0; b < d; ++b) {
          const Complex* pt = at(a, b).entries.data();
          const int phase_exp = normalize_index(2 * (n * a - m * b), 2 * d);
          const Complex phase = tau[static_cast<std::size_t>(phase_exp)];
          const int split = d - m;
          for (int c = 0; c < split; ++c)
            conj2 = std::max(conj2, std::norm(pg[c] * pt[c] - phase * pt[c + m]));
          for (int c = split; c < d; ++c)
            conj2 = std::max(conj2, std::norm(pg[c] * pt[c] - phase * pt[c + m - d]));
        }
      }
    }
  rep.conjugation_error = std::sqrt(conj2);

  // Adjoint pairing: D(m,n)^dagger lands on D(-m,-n) up to a sign.  The sign
  // is read off each pair (nearest of +-1), never assumed, and the count of
  // negative pairs is reported.
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const SparseDisplacement& s = at(m, n);
      const SparseDisplacement& mirror = at((d - m) % d, (d - n) % d);
      // Column c of D^dagger holds conj(entry((c - m) mod d)) at row (c - m) mod d,
      // the same row pattern as mirror (offset d - m); compare entries against
      // +-mirror.  (c - m) mod d equals (c + mirror.offset) mod d.
      double plus = 0.0, minus = 0.0;
      for (int c = 0; c < d; ++c) {
        const Complex adj = std::conj(s.entries((c + mirror.offset) % d));
        plus = std::max(plus, std::abs(adj - mirror.entries(c)));
        minus = std::max(minus, std::abs(adj + mirror.entries(c)));
      }
      if (minus < plus) ++rep.negative_adjoint_pairs;
      rep.adjoint_pairing_error = std::max(rep.adjoint_pairing_error, std::min(plus, minus));
    }

  rep.all_ok = rep.unitarity_ok() && rep.orthogonality_ok() && rep.composition_ok() &&
               rep.parity_ok() && rep.conjugation_ok() && rep.adjoint_pairing_ok();
  return rep;
}

}  // namespace ambiq
