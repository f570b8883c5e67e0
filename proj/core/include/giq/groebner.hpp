#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "giq/poly.hpp"

namespace giq {

/// Reduced, monic Gröbner basis of a homogeneous ideal.
///
/// When built with a degree bound the basis is only guaranteed up to that
/// degree; normal forms of anything above it are refused.
class GroebnerBasis {
 public:
  GroebnerBasis(SignaturePtr sig, MonomialOrder order,
                std::vector<GradedPolynomial> elements,
                std::optional<int> valid_through);

  const SignaturePtr& signature() const { return sig_; }
  const MonomialOrder& order() const { return order_; }
  /// Sorted by leading monomial, descending.
  const std::vector<GradedPolynomial>& elements() const { return elements_; }
  const std::vector<Exponents>& leading_monomials() const { return leading_; }
  std::optional<int> valid_through() const { return valid_through_; }

  /// True when no leading monomial divides e.
  bool is_standard(const Exponents& e) const;

  using TermList = std::vector<std::pair<Exponents, Rational>>;
  /// Elements as term lists, leading term first.
  const std::vector<TermList>& term_lists() const { return term_lists_; }

 private:
  SignaturePtr sig_;
  MonomialOrder order_;
  std::vector<GradedPolynomial> elements_;
  std::vector<Exponents> leading_;
  std::vector<TermList> term_lists_;
  std::optional<int> valid_through_;
};

/// Buchberger's algorithm with the product and chain criteria. Pairs are
/// taken by lcm degree, then smallest lcm in the order. Relations must be
/// homogeneous over one signature. With `degree_bound` set, S-pairs whose
/// lcm lies above the bound are discarded.
GroebnerBasis buchberger(std::span<const GradedPolynomial> relations,
                         const MonomialOrder& order,
                         std::optional<int> degree_bound = std::nullopt);

/// Fully reduced remainder of p modulo the basis.
GradedPolynomial normal_form(const GradedPolynomial& p, const GroebnerBasis& gb);

/// S-polynomial of two basis elements (both monic leading terms assumed).
GradedPolynomial s_polynomial(const GradedPolynomial& f, const GradedPolynomial& g,
                              const MonomialOrder& order);

/// All monomials of cohomological degree d, ascending in `order`.
std::vector<Exponents> monomials_of_degree(const RingSignature& sig, int d,
                                           const MonomialOrder& order);

/// A graded ring presented as generators modulo homogeneous relations.
class QuotientRing {
 public:
  QuotientRing(SignaturePtr sig, std::vector<GradedPolynomial> relations,
               MonomialOrder order, std::optional<int> degree_bound = std::nullopt);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<GradedPolynomial>& relations() const { return relations_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const MonomialOrder& order() const { return gb_.order(); }

  GradedPolynomial normal_form(const GradedPolynomial& p) const {
    return giq::normal_form(p, gb_);
  }

 private:
  SignaturePtr sig_;
  std::vector<GradedPolynomial> relations_;
  GroebnerBasis gb_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// Standard monomials of degree d, ascending in the ring's order; a vector
/// space basis of the degree-d piece.
std::vector<Exponents> normal_monomials(const QuotientRing& q, int d);

/// dims[k] = dimension of the degree-2k piece, for 2k <= bound.
std::vector<long long> graded_dimensions(const QuotientRing& q, int bound);

}  // namespace giq
