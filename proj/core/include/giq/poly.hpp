#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "giq/rational.hpp"

namespace giq {

struct Variable {
  std::string name;
  int degree = 2;  // cohomological degree, even and >= 2

  bool operator==(const Variable&) const = default;
};

/// Ordered generator list of a graded ring. Immutable once built; shared by
/// every polynomial over it.
class RingSignature {
 public:
  explicit RingSignature(std::vector<Variable> variables);

  std::size_t size() const { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingSignature& other) const {
    return variables_ == other.variables_;
  }

 private:
  std::vector<Variable> variables_;
};

using SignaturePtr = std::shared_ptr<const RingSignature>;

SignaturePtr make_signature(std::vector<Variable> variables);

using Exponents = std::vector<std::uint32_t>;

/// Cohomological degree of a monomial: sum of exponent * generator degree.
int monomial_degree(const RingSignature& sig, const Exponents& e);

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
/// b / a, assuming divides(a, b).
Exponents quotient(const Exponents& b, const Exponents& a);
Exponents product(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);

enum class OrderKind { lex, grlex };

/// Monomial order over a fixed signature. precedence[0] is the largest
/// variable. grlex compares total exponent first, then lex.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  /// Lex or grlex with the signature's own variable order as precedence.
  static MonomialOrder natural(OrderKind kind, std::size_t variables);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const {
    return compare(a, b) < 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_ = OrderKind::lex;
  std::vector<std::size_t> precedence_;
};

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

/// Multivariate polynomial over the rationals on a graded signature. Terms
/// are stored with no zero coefficients.
class GradedPolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit GradedPolynomial(SignaturePtr sig);
  GradedPolynomial(SignaturePtr sig, TermMap terms);

  static GradedPolynomial constant(SignaturePtr sig, const Rational& c);
  static GradedPolynomial variable(SignaturePtr sig, std::size_t index);
  static GradedPolynomial monomial(SignaturePtr sig, Exponents e,
                                   const Rational& c = 1);

  const SignaturePtr& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Exponents& e) const;

  /// Common degree of all monomials; nullopt for the zero polynomial or an
  /// inhomogeneous one.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  int max_degree() const;

  /// Largest monomial and its coefficient in the given order. Requires
  /// non-zero.
  std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;

  GradedPolynomial& operator+=(const GradedPolynomial& q);
  GradedPolynomial& operator-=(const GradedPolynomial& q);
  GradedPolynomial& operator*=(const Rational& c);

  GradedPolynomial operator-() const;
  GradedPolynomial pow(unsigned k) const;

  bool operator==(const GradedPolynomial& q) const;

 private:
  void require_same_ring(const GradedPolynomial& q) const;

  SignaturePtr sig_;
  TermMap terms_;
};

GradedPolynomial operator+(GradedPolynomial p, const GradedPolynomial& q);
GradedPolynomial operator-(GradedPolynomial p, const GradedPolynomial& q);
GradedPolynomial operator*(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial operator*(GradedPolynomial p, const Rational& c);
GradedPolynomial operator*(const Rational& c, GradedPolynomial p);
GradedPolynomial operator/(GradedPolynomial p, const Rational& c);

/// Exact product; throws InputError on signature mismatch.
GradedPolynomial multiply(const GradedPolynomial& p, const GradedPolynomial& q);

/// Sum of the monomials of degree exactly d.
GradedPolynomial graded_component(const GradedPolynomial& p, int d);

/// Ring homomorphism fixed by its values on the source generators.
class RingMap {
 public:
  /// Every image must be homogeneous of the same degree as its generator
  /// (zero is allowed). Throws InputError otherwise.
  RingMap(SignaturePtr source, SignaturePtr target,
          std::vector<GradedPolynomial> images);

  const SignaturePtr& source() const { return source_; }
  const SignaturePtr& target() const { return target_; }
  const std::vector<GradedPolynomial>& images() const { return images_; }

 private:
  SignaturePtr source_;
  SignaturePtr target_;
  std::vector<GradedPolynomial> images_;
};

/// Substitution homomorphism.
GradedPolynomial apply_map(const RingMap& m, const GradedPolynomial& p);

/// ASCII form, terms descending in `order`: "3/2*x^2*y - y^3".
std::string to_string(const GradedPolynomial& p, const MonomialOrder& order);
/// Same, using lex in signature order.
std::string to_string(const GradedPolynomial& p);

std::string monomial_to_string(const RingSignature& sig, const Exponents& e);

/// Parses sums of products with rational coefficients, `^` powers and
/// parentheses. Unknown identifiers are rejected.
GradedPolynomial parse_polynomial(std::string_view text, const SignaturePtr& sig);

}  // namespace giq
