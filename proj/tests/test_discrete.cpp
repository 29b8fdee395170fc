#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ambiq/discrete.hpp"
#include "ambiq/errors.hpp"

using namespace ambiq;

namespace {

// Dense ground truth built directly from the clock and shift definitions.
CMatrix shift_matrix(int d) {
  CMatrix x = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

CMatrix clock_matrix(int d) {
  CMatrix z = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = std::polar(1.0, 2.0 * kPi * j / d);
  return z;
}

CMatrix matrix_power(const CMatrix& m, int k) {
  CMatrix out = CMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = (m * out).eval();
  return out;
}

// Literal tau^{m*n} X^m Z^n without index normalization, valid for any m, n.
CMatrix literal_displacement(int d, int m, int n) {
  const Complex tau_mn = std::polar(1.0, kPi * static_cast<double>(m) * n / d);
  return tau_mn * matrix_power(shift_matrix(d), m) * matrix_power(clock_matrix(d), n);
}

CMatrix random_matrix(int d, unsigned seed) {
  unsigned state = seed;
  const auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 17;
    state ^= state << 5;
    return static_cast<double>(state % 10007) / 10007.0 - 0.5;
  };
  CMatrix a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = Complex(next(), next());
  return a;
}

CMatrix random_hermitian(int d, unsigned seed) {
  const CMatrix a = random_matrix(d, seed);
  return 0.5 * (a + a.adjoint().eval());
}

}  // namespace

TEST_CASE("pinned displacement matrices") {
  const DiscreteDisplacement x = discrete_displacement(2, 1, 0);
  CHECK(std::abs(x.matrix(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(x.matrix(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x.matrix(0, 0)) < 1e-15);

  const DiscreteDisplacement z = discrete_displacement(3, 0, 1);
  const Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);
  CHECK(std::abs(z.matrix(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(z.matrix(1, 1) - omega) < 1e-15);
  CHECK(std::abs(z.matrix(2, 2) - omega * omega) < 1e-15);
  CHECK(z.matrix.cwiseAbs().sum() == doctest::Approx(3.0).epsilon(1e-14));

  CHECK(max_abs(CMatrix(discrete_displacement(4, 0, 0).matrix - CMatrix::Identity(4, 4))) ==
        0.0);

  // tau X Z at d=2 is the remaining Pauli matrix.
  const DiscreteDisplacement y = discrete_displacement(2, 1, 1);
  CHECK(std::abs(y.matrix(0, 1) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(y.matrix(1, 0) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("displacements are unitary and traceless away from the origin") {
  for (int d : {2, 3, 5, 8, 16, 64}) {
    const DiscreteDisplacement dd = discrete_displacement(d, d / 2, d - 1);
    CHECK(max_abs(CMatrix(dd.matrix * dd.matrix.adjoint() - CMatrix::Identity(d, d))) <
          1e-13);
  }
  CHECK(std::abs(discrete_displacement(5, 2, 3).matrix.trace()) < 1e-13);
}

TEST_CASE("negative indices normalize to the same matrix") {
  const DiscreteDisplacement a = discrete_displacement(5, -2, -7);
  const DiscreteDisplacement b = discrete_displacement(5, 3, 3);
  CHECK(a.m == 3);
  CHECK(a.n == 3);
  CHECK(max_abs(CMatrix(a.matrix - b.matrix)) == 0.0);
}

TEST_CASE("displacement construction rejects dimension below two") {
  CHECK_THROWS_AS(discrete_displacement(1, 0, 0), InvalidArgument);
}

TEST_CASE("coefficient table of the identity and of a basis member") {
  const DiscreteAmbiguity ti = discrete_ambiguity(CMatrix::Identity(4, 4));
  CHECK(std::abs(ti.table(0, 0) - 2.0) < 1e-14);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (m != 0 || n != 0) CHECK(std::abs(ti.table(m, n)) < 1e-14);

  const DiscreteAmbiguity td = discrete_ambiguity(discrete_displacement(3, 1, 1).matrix);
  CHECK(std::abs(td.table(1, 1) - std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(td.table(0, 0)) < 1e-14);
  CHECK(std::abs(td.table(2, 2)) < 1e-14);
}

TEST_CASE("expansion and reconstruction invert each other") {
  const CMatrix h = random_hermitian(16, 0x9e3779b9u);
  CHECK(max_abs(CMatrix(reconstruct_discrete(discrete_ambiguity(h)) - h)) < 1e-10);

  const CMatrix g = random_matrix(7, 0x51ed270bu);
  CHECK(max_abs(CMatrix(reconstruct_discrete(discrete_ambiguity(g)) - g)) < 1e-12);
}

TEST_CASE("expansion preserves the Frobenius norm") {
  const CMatrix a = random_matrix(9, 0x1234abcdu);
  const DiscreteAmbiguity t = discrete_ambiguity(a);
  double sum = 0.0;
  for (int m = 0; m < 9; ++m)
    for (int n = 0; n < 9; ++n) sum += std::norm(t.table(m, n));
  CHECK(sum == doctest::Approx((a.adjoint() * a).trace().real()).epsilon(1e-10));
}

TEST_CASE("Hermitian matrices pair mirrored table entries up to the wraparound sign") {
  for (int d : {5, 6}) {
    const DiscreteAmbiguity t = discrete_ambiguity(random_hermitian(d, 0x2545f491u + d));
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        const double sign = (m == 0 || n == 0) ? 1.0 : ((d + m + n) % 2 == 0 ? 1.0 : -1.0);
        const Complex mirrored = t.table((d - m) % d, (d - n) % d);
        CHECK(std::abs(mirrored - sign * std::conj(t.table(m, n))) < 1e-12);
      }
  }
}

TEST_CASE("trace product matches dense traces") {
  // Pure-state projector: the pairing with itself is Tr rho^2 = 1.
  CVector psi(4);
  psi << Complex(0.5, 0.2), Complex(-0.3, 0.4), Complex(0.1, -0.6), Complex(0.2, 0.1);
  psi /= std::sqrt(psi.squaredNorm());
  const CMatrix rho = psi * psi.adjoint();
  const DiscreteAmbiguity tr = discrete_ambiguity(rho);
  CHECK(std::abs(discrete_trace_product(tr, tr) - 1.0) < 1e-12);

  // Shift against clock at d=2: Tr{X Z^dagger} = 0.
  const DiscreteAmbiguity tx = discrete_ambiguity(shift_matrix(2));
  const DiscreteAmbiguity tz = discrete_ambiguity(clock_matrix(2));
  CHECK(std::abs(discrete_trace_product(tx, tz)) < 1e-14);

  const CMatrix a = random_matrix(8, 0xdeadbeefu);
  const CMatrix b = random_matrix(8, 0xcafef00du);
  const Complex direct = (a * b.adjoint()).trace();
  CHECK(std::abs(discrete_trace_product(discrete_ambiguity(a), discrete_ambiguity(b)) -
                 direct) < 1e-12);
}

TEST_CASE("composition rule against dense products") {
  // In-range indices: D(1,0) D(0,1) = tau^{-1} D(1,1) at d=3.
  const CMatrix lhs = discrete_displacement(3, 1, 0).matrix * discrete_displacement(3, 0, 1).matrix;
  const Complex tau_inv = std::polar(1.0, -kPi / 3.0);
  CHECK(max_abs(CMatrix(lhs - tau_inv * discrete_displacement(3, 1, 1).matrix)) < 1e-14);

  // Wrapped shift index at d=4: D(3,1) D(2,2) reduces to D(1,3) with the
  // wraparound sign (-1)^{n1+n2} folded against tau^{n1 m2 - m1 n2}.
  const CMatrix wrapped =
      discrete_displacement(4, 3, 1).matrix * discrete_displacement(4, 2, 2).matrix;
  const Complex phase = -std::polar(1.0, kPi * (1.0 * 2.0 - 3.0 * 2.0) / 4.0);
  CHECK(max_abs(CMatrix(wrapped - phase * discrete_displacement(4, 1, 3).matrix)) < 1e-14);
}

TEST_CASE("doubled-torus displacement average is the reflection") {
  for (int d : {2, 3}) {
    CMatrix sum = CMatrix::Zero(d, d);
    for (int m = 0; m < 2 * d; ++m)
      for (int n = 0; n < 2 * d; ++n) sum += literal_displacement(d, m, n);
    sum /= 2.0 * d;
    CMatrix reflection = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) reflection((d - j) % d, j) = 1.0;
    CHECK(max_abs(CMatrix(sum - reflection)) < 1e-13);
  }
}

TEST_CASE("identity report passes at desk dimensions") {
  for (int d : {2, 3, 4, 5, 8, 16, 32}) {
    const IdentityReport rep = verify_discrete_identities(d);
    CHECK(rep.all_ok);
    CHECK(rep.unitarity_error <= 1e-12);
    CHECK(rep.orthogonality_error <= 1e-12);
    CHECK(rep.composition_error <= 1e-12);
    CHECK(rep.parity_error <= 1e-12);
    CHECK(rep.conjugation_error <= 1e-12);
    CHECK(rep.adjoint_pairing_error <= 1e-12);

    // The adjoint of D(m,n) is -D(-m,-n) exactly when both indices wrap and
    // d+m+n is odd; count those pairs.
    int expected = 0;
    for (int m = 1; m < d; ++m)
      for (int n = 1; n < d; ++n)
        if ((d + m + n) % 2 == 1) ++expected;
    CHECK(rep.negative_adjoint_pairs == expected);
  }
}

TEST_CASE("mismatched shapes are rejected") {
  CHECK_THROWS_AS(discrete_ambiguity(CMatrix::Zero(3, 4)), InvalidArgument);

  DiscreteAmbiguity bad;
  bad.dim = 5;
  bad.table = CMatrix::Zero(4, 4);
  CHECK_THROWS_AS(reconstruct_discrete(bad), InvalidArgument);

  const DiscreteAmbiguity t2 = discrete_ambiguity(CMatrix::Identity(2, 2));
  const DiscreteAmbiguity t3 = discrete_ambiguity(CMatrix::Identity(3, 3));
  CHECK_THROWS_AS(discrete_trace_product(t2, t3), InvalidArgument);
}
