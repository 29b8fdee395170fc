#include "ambiq/observables.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ambiq/errors.hpp"
#include "ambiq/fourier.hpp"

namespace ambiq {

namespace {

using Word = std::vector<Letter>;

std::map<Word, Complex> combine_terms(const PolynomialOperator& op) {
  std::map<Word, Complex> out;
  for (const auto& t : op.terms) out[t.word] += t.coeff;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == Complex(0.0, 0.0))
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

// One Bopp letter acting on a derivative-of-delta table.  The delta algebra
//   eta * delta^(a)(eta) = -a delta^(a-1)(eta)
// keeps the support finite, so each letter maps a table to a table.
std::map<std::pair<int, int>, Complex> descriptor_step(
    const std::map<std::pair<int, int>, Complex>& in, Letter letter, double hbar) {
  const Complex dfac(0.0, -hbar);  // hbar / i
  std::map<std::pair<int, int>, Complex> out;
  for (const auto& [ab, c] : in) {
    const auto [a, b] = ab;
    if (letter == Letter::Q) {
      out[{a + 1, b}] += dfac * c;
      if (b >= 1) out[{a, b - 1}] += -0.5 * static_cast<double>(b) * c;
    } else {
      out[{a, b + 1}] += dfac * c;
      if (a >= 1) out[{a - 1, b}] += 0.5 * static_cast<double>(a) * c;
    }
  }
  return out;
}

struct Stencil {
  std::vector<double> weights;
  int radius = 0;
};

Stencil origin_stencil(int order, double step) {
  Stencil s;
  s.weights = central_difference_weights(order, step);
  s.radius = static_cast<int>(s.weights.size() / 2);
  return s;
}

void require_ambiguity_kind(const ComplexField& f, const char* what) {
  if (f.kind != FieldKind::ambiguity)
    throw InvalidArgument(std::string(what) + " requires an ambiguity-kind field");
}

}  // namespace

PolynomialOperator PolynomialOperator::combined() const {
  PolynomialOperator out;
  for (auto& [word, coeff] : combine_terms(*this)) out.terms.push_back({coeff, word});
  return out;
}

int PolynomialOperator::degree() const {
  int deg = 0;
  for (const auto& [word, coeff] : combine_terms(*this))
    deg = std::max(deg, static_cast<int>(word.size()));
  return deg;
}

bool PolynomialOperator::is_hermitian() const {
  const auto map = combine_terms(*this);
  for (const auto& [word, coeff] : map) {
    Word rev(word.rbegin(), word.rend());
    const auto it = map.find(rev);
    if (it == map.end()) return false;
    if (std::abs(it->second - std::conj(coeff)) > 1e-12 * (1.0 + std::abs(coeff)))
      return false;
  }
  return true;
}

PolynomialOperator parse_operator(const std::string& text) {
  PolynomialOperator op;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) throw InvalidArgument("empty operator expression");

  while (i < text.size()) {
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1.0;
      ++i;
      skip_ws();
    } else if (!op.terms.empty()) {
      throw InvalidArgument("expected '+' or '-' between operator terms");
    }

    PolynomialTerm term{Complex(sign, 0.0), {}};
    bool has_content = false;
    while (i < text.size()) {
      const char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (ch == '+' || ch == '-') break;
      if (ch == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        const char* begin = text.c_str() + i;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin || !std::isfinite(value))
          throw InvalidArgument("bad numeric coefficient in operator expression");
        i += static_cast<std::size_t>(end - begin);
        term.coeff *= value;
        has_content = true;
        continue;
      }
      if (ch == 'Q' || ch == 'q' || ch == 'P' || ch == 'p') {
        const Letter letter = (ch == 'Q' || ch == 'q') ? Letter::Q : Letter::P;
        ++i;
        int power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidArgument("'^' must be followed by a non-negative integer");
          power = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            power = power * 10 + (text[i] - '0');
            if (power > 64) throw InvalidArgument("operator power too large");
            ++i;
          }
        }
        for (int k = 0; k < power; ++k) term.word.push_back(letter);
        has_content = true;
        continue;
      }
      throw InvalidArgument(std::string("unexpected character '") + ch +
                            "' in operator expression");
    }
    if (!has_content) throw InvalidArgument("empty term in operator expression");
    op.terms.push_back(std::move(term));
    skip_ws();
  }
  return op;
}

std::string to_string(const PolynomialOperator& op) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : op.terms) {
    if (!first) out << " + ";
    first = false;
    if (t.coeff.imag() == 0.0)
      out << t.coeff.real();
    else
      out << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag()
          << "i)";
    for (const Letter l : t.word) out << (l == Letter::Q ? " Q" : " P");
  }
  if (first) out << "0";
  return out.str();
}

int DifferentialDescriptor::max_eta_order() const {
  int m = 0;
  for (const auto& [ab, c] : table) m = std::max(m, ab.first);
  return m;
}

int DifferentialDescriptor::max_xi_order() const {
  int m = 0;
  for (const auto& [ab, c] : table) m = std::max(m, ab.second);
  return m;
}

DifferentialDescriptor compile_descriptor(const PolynomialOperator& op,
                                          const PhysicalConstants& c) {
  if (op.terms.empty()) throw InvalidArgument("operator has no terms");
  const double norm = std::sqrt(2.0 * kPi * c.hbar);
  DifferentialDescriptor d;
  for (const auto& term : op.terms) {
    std::map<std::pair<int, int>, Complex> table{{{0, 0}, Complex(norm, 0.0)}};
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it)
      table = descriptor_step(table, *it, c.hbar);
    for (const auto& [ab, value] : table) d.table[ab] += term.coeff * value;
  }
  for (auto it = d.table.begin(); it != d.table.end();) {
    if (it->second == Complex(0.0, 0.0))
      it = d.table.erase(it);
    else
      ++it;
  }
  return d;
}

ComplexField bopp_apply(const ComplexField& field, Letter letter) {
  field.validate();
  require_ambiguity_kind(field, "bopp_apply");
  if (field.grid.axis1.count < 8 || field.grid.axis2.count < 8)
    throw InvalidArgument("bopp_apply needs at least 8 samples per axis");

  const double hbar = field.constants.hbar;
  const Complex dfac(0.0, -hbar);  // hbar / i
  CMatrix deriv = field.values;
  ComplexField out = field;
  if (letter == Letter::Q) {
    spectral_derivative_axis1(deriv, field.grid.axis1.step);
    for (int i = 0; i < field.grid.axis1.count; ++i)
      for (int j = 0; j < field.grid.axis2.count; ++j)
        out.values(i, j) =
            dfac * deriv(i, j) + 0.5 * field.grid.axis2.value(j) * field.values(i, j);
  } else {
    spectral_derivative_axis2(deriv, field.grid.axis2.step);
    for (int i = 0; i < field.grid.axis1.count; ++i)
      for (int j = 0; j < field.grid.axis2.count; ++j)
        out.values(i, j) =
            dfac * deriv(i, j) - 0.5 * field.grid.axis1.value(i) * field.values(i, j);
  }
  return out;
}

Complex expectation_polynomial(const ComplexField& field, const PolynomialOperator& op) {
  field.validate();
  require_ambiguity_kind(field, "expectation_polynomial");
  const DifferentialDescriptor d = compile_descriptor(op, field.constants);

  const int o1 = field.grid.axis1.origin();
  const int o2 = field.grid.axis2.origin();
  if (o1 < 0 || o2 < 0)
    throw InvalidArgument("expectation_polynomial needs origin samples on both axes");

  Complex result(0.0, 0.0);
  for (const auto& [ab, coeff] : d.table) {
    const Stencil sa = origin_stencil(ab.first, field.grid.axis1.step);
    const Stencil sb = origin_stencil(ab.second, field.grid.axis2.step);
    if (o1 - sa.radius < 0 || o1 + sa.radius >= field.grid.axis1.count ||
        o2 - sb.radius < 0 || o2 + sb.radius >= field.grid.axis2.count)
      throw InvalidArgument("derivative stencil exceeds the field grid");
    Complex deriv(0.0, 0.0);
    for (int r = 0; r < static_cast<int>(sa.weights.size()); ++r)
      for (int t = 0; t < static_cast<int>(sb.weights.size()); ++t)
        deriv += sa.weights[static_cast<std::size_t>(r)] *
                 sb.weights[static_cast<std::size_t>(t)] *
                 field.values(o1 + r - sa.radius, o2 + t - sb.radius);
    result += coeff * deriv;
  }
  return result;
}

Complex expectation_polynomial(const AmbiguityClosedFormGaussian& closed,
                               const PolynomialOperator& op) {
  const DifferentialDescriptor d = compile_descriptor(op, closed.constants);
  Complex result(0.0, 0.0);
  for (const auto& [ab, coeff] : d.table)
    result += coeff * closed.derivative_at_origin(ab.first, ab.second);
  return result;
}

Complex trace_product(const ComplexField& a, const ComplexField& b) {
  a.validate();
  b.validate();
  require_ambiguity_kind(a, "trace_product");
  require_ambiguity_kind(b, "trace_product");
  if (!same_phase_grid(a.grid, b.grid))
    throw InvalidArgument("trace_product requires identical grids");

  Complex sum(0.0, 0.0);
  for (int i = 0; i < a.grid.axis1.count; ++i) {
    const int ri = a.grid.axis1.reflect(i);
    if (ri < 0) continue;
    for (int j = 0; j < a.grid.axis2.count; ++j) {
      const int rj = a.grid.axis2.reflect(j);
      if (rj < 0) continue;
      sum += a.values(i, j) * b.values(ri, rj);
    }
  }
  return a.grid.axis1.step * a.grid.axis2.step * sum;
}

ComplexField descriptor_field(const DifferentialDescriptor& d, const PhaseGrid& grid,
                              const PhysicalConstants& c) {
  const int o1 = grid.axis1.origin();
  const int o2 = grid.axis2.origin();
  if (o1 < 0 || o2 < 0)
    throw InvalidArgument("descriptor_field needs origin samples on both axes");

  ComplexField out;
  out.grid = grid;
  out.kind = FieldKind::ambiguity;
  out.constants = c;
  out.values = CMatrix::Zero(grid.axis1.count, grid.axis2.count);
  const double cell = grid.axis1.step * grid.axis2.step;

  for (const auto& [ab, coeff] : d.table) {
    const Stencil sa = origin_stencil(ab.first, grid.axis1.step);
    const Stencil sb = origin_stencil(ab.second, grid.axis2.step);
    for (const int edge1 : {o1 - sa.radius, o1 + sa.radius})
      if (edge1 < 0 || edge1 >= grid.axis1.count || grid.axis1.reflect(edge1) < 0)
        throw InvalidArgument("descriptor stencil exceeds the grid");
    for (const int edge2 : {o2 - sb.radius, o2 + sb.radius})
      if (edge2 < 0 || edge2 >= grid.axis2.count || grid.axis2.reflect(edge2) < 0)
        throw InvalidArgument("descriptor stencil exceeds the grid");
    // Scatter at reflected offsets so the reflection inside trace_product
    // lands each weight back on the matching field sample.
    for (int r = -sa.radius; r <= sa.radius; ++r)
      for (int t = -sb.radius; t <= sb.radius; ++t)
        out.values(o1 - r, o2 - t) += coeff *
                                      sa.weights[static_cast<std::size_t>(r + sa.radius)] *
                                      sb.weights[static_cast<std::size_t>(t + sb.radius)] /
                                      cell;
  }
  return out;
}

OperatorMatrix polynomial_operator_matrix(const PolynomialOperator& op, const Grid1D& grid,
                                          const PhysicalConstants& c) {
  if (op.terms.empty()) throw InvalidArgument("operator has no terms");
  const auto [q_op, p_op] = operator_matrices(grid, c);
  const int n = grid.count;
  CMatrix sum = CMatrix::Zero(n, n);
  for (const auto& term : op.terms) {
    CMatrix prod = CMatrix::Identity(n, n);
    for (const Letter l : term.word)
      prod = (prod * (l == Letter::Q ? q_op.entries : p_op.entries)).eval();
    sum += term.coeff * prod;
  }
  OperatorMatrix out{grid, std::move(sum), c};
  out.validate();
  return out;
}

}  // namespace ambiq
