#include "giq/pairing.hpp"

#include <utility>

#include "giq/errors.hpp"

namespace giq {

int top_degree(const VSpace& v) {
  int top = v.betti().top_degree();
  if (top < 0) throw IntegrityError("V is zero in every computed degree");
  return top;
}

GradedPolynomial top_class(const VSpace& v, std::optional<int> top) {
  int t = top.value_or(top_degree(v));
  const auto& basis = v.basis(t);
  if (basis.size() != 1)
    throw IntegrityError("dim V^" + std::to_string(t) + " = " +
                         std::to_string(basis.size()) + ", expected 1");
  const GradedPolynomial& tau = basis.front();
  Rational lc = tau.leading_term(v.ring()->order()).second;
  return tau / lc;
}

Matrix pairing_matrix(const VSpace& v, int i, std::optional<int> top) {
  int t = top.value_or(top_degree(v));
  if (i < 0 || i > t) throw InputError("pairing degree outside [0, top]");
  GradedPolynomial tau = top_class(v, t);
  Exponents lead = tau.leading_term(v.ring()->order()).first;
  const auto& left = v.basis(i);
  const auto& right = v.basis(t - i);
  Matrix m(left.size(), right.size());
  for (std::size_t a = 0; a < left.size(); ++a)
    for (std::size_t b = 0; b < right.size(); ++b) {
      GradedPolynomial prod = v.ring()->normal_form(multiply(left[a], right[b]));
      Rational c = prod.coefficient(lead);
      if (!(prod == tau * c))
        throw IntegrityError("product of V^" + std::to_string(i) + " and V^" +
                             std::to_string(t - i) + " basis elements leaves the span of "
                             "the top class: " + to_string(prod, v.ring()->order()));
      m(a, b) = c;
    }
  return m;
}

int signature(const Matrix& input) {
  if (!input.is_symmetric()) throw InputError("signature: matrix is not symmetric");
  Matrix a = input;
  std::size_t n = a.rows();
  int sig = 0;
  // Symmetric elimination keeps a congruent to the input at every step.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < n; ++j) a(j, dst) += f * a(j, src);
  };
  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(a(j, x), a(j, y));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // Hyperbolic step: a zero diagonal with a(k, j) != 0 becomes 2 a(k, j).
      std::size_t r = n, s = n;
      for (std::size_t x = k; x < n && r == n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (sgn(a(x, y)) != 0) {
            r = x;
            s = y;
            break;
          }
      if (r == n) throw InputError("signature: matrix is degenerate");
      add_multiple(r, s, Rational(1));
      p = r;
    }
    swap_index(k, p);
    Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      add_multiple(i, k, -a(i, k) / pivot);
    }
    sig += sgn(pivot) > 0 ? 1 : -1;
  }
  return sig;
}

PairingReport pairing_report(const VSpace& v, std::optional<int> top) {
  int t = top.value_or(top_degree(v));
  PairingReport report{t, top_class(v, t), {}};
  for (int i = 0; i <= report.top_degree - i; i += 2) {
    PairingBlock block;
    block.degree = i;
    block.complement = report.top_degree - i;
    block.matrix = pairing_matrix(v, i, report.top_degree);
    if (block.matrix.square()) {
      block.determinant = determinant(block.matrix);
      if (block.matrix.is_symmetric() && sgn(*block.determinant) != 0)
        block.signature = signature(block.matrix);
    }
    report.blocks.push_back(std::move(block));
  }
  return report;
}

}  // namespace giq
