#include "giq/truncation.hpp"

#include "giq/errors.hpp"

namespace giq {

int TruncationConstraint::fiber_degree(const Exponents& e) const {
  const RingSignature& sig = *target->signature();
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (fiber[i]) d += static_cast<int>(e[i]) * sig[i].degree;
  return d;
}

void TruncationConstraint::validate(const QuotientRing& source) const {
  if (!target) throw InputError("constraint '" + label + "' has no target ring");
  if (!(*restriction.source() == *source.signature()))
    throw InputError("constraint '" + label + "': map source is not the main ring");
  if (!(*restriction.target() == *target->signature()))
    throw InputError("constraint '" + label + "': map target is not the target ring");
  if (fiber.size() != target->signature()->size())
    throw InputError("constraint '" + label + "': base/fiber split does not cover the target");
  if (n_h < 0) throw InputError("constraint '" + label + "': n_h must be >= 0");
}

namespace {

Matrix build_matrix(const QuotientRing& ring, const TruncationConstraint& c, int d,
                    bool truncate) {
  c.validate(ring);
  std::vector<Exponents> cols = normal_monomials(ring, d);
  std::vector<Exponents> rows;
  for (auto& m : normal_monomials(*c.target, d))
    if (!truncate || c.fiber_degree(m) >= c.fiber_threshold()) rows.push_back(std::move(m));
  Matrix mat(rows.size(), cols.size());
  if (rows.empty()) return mat;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    GradedPolynomial image = c.target->normal_form(
        apply_map(c.restriction, GradedPolynomial::monomial(ring.signature(), cols[j])));
    if (!image.is_zero() && image.degree() != d)
      throw InputError("constraint '" + c.label + "' shifts degrees");
    for (std::size_t i = 0; i < rows.size(); ++i) mat(i, j) = image.coefficient(rows[i]);
  }
  return mat;
}

}  // namespace

Matrix restriction_matrix(const QuotientRing& ring, const TruncationConstraint& c, int d) {
  if (d < 0) throw InputError("restriction_matrix: negative degree");
  return build_matrix(ring, c, d, true);
}

Matrix full_restriction_matrix(const QuotientRing& ring, const TruncationConstraint& c,
                               int d) {
  if (d < 0) throw InputError("full_restriction_matrix: negative degree");
  return build_matrix(ring, c, d, false);
}

VSpace::VSpace(QuotientRingPtr ring, std::vector<TruncationConstraint> constraints,
               int bound, std::map<int, std::vector<GradedPolynomial>> bases)
    : ring_(std::move(ring)),
      constraints_(std::move(constraints)),
      bound_(bound),
      bases_(std::move(bases)) {
  for (int d = 0; d <= bound_; d += 2) {
    auto it = bases_.find(d);
    betti_.coefficients.push_back(
        it == bases_.end() ? 0 : static_cast<long long>(it->second.size()));
  }
}

const std::vector<GradedPolynomial>& VSpace::basis(int d) const {
  static const std::vector<GradedPolynomial> empty;
  auto it = bases_.find(d);
  return it == bases_.end() ? empty : it->second;
}

VSpace compute_v(QuotientRingPtr ring, std::vector<TruncationConstraint> constraints,
                 int bound) {
  if (bound < 0) throw InputError("compute_v: negative bound");
  for (const auto& c : constraints) c.validate(*ring);
  std::map<int, std::vector<GradedPolynomial>> bases;
  for (int d = 0; d <= bound; d += 2) {
    std::vector<Exponents> cols = normal_monomials(*ring, d);
    Matrix stacked(0, cols.size());
    for (const auto& c : constraints) stacked.append_rows(restriction_matrix(*ring, c, d));
    std::vector<GradedPolynomial> basis;
    for (const auto& v : kernel(stacked)) {
      GradedPolynomial::TermMap terms;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (sgn(v[j]) != 0) terms.emplace(cols[j], v[j]);
      basis.emplace_back(ring->signature(), std::move(terms));
    }
    bases.emplace(d, std::move(basis));
  }
  return VSpace(std::move(ring), std::move(constraints), bound, std::move(bases));
}

bool verify_restriction_surjectivity(const QuotientRing& ring,
                                     std::span<const TruncationConstraint> constraints,
                                     int k_from, int k_to) {
  if (k_from < 0 || k_to < k_from)
    throw InputError("verify_restriction_surjectivity: bad degree range");
  for (int k = k_from; k <= k_to; ++k) {
    int d = 2 * k;
    std::size_t cols = normal_monomials(ring, d).size();
    Matrix stacked(0, cols);
    for (const auto& c : constraints) stacked.append_rows(full_restriction_matrix(ring, c, d));
    if (rank(stacked) != stacked.rows()) return false;
  }
  return true;
}

std::optional<PoincareSeries> truncation_tail(const TruncationConstraint& c) {
  const RingSignature& sig = *c.target->signature();
  const auto& gb = c.target->groebner();
  for (const auto& g : gb.elements())
    for (const auto& [e, coef] : g.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (c.fiber[i] && e[i] != 0) return std::nullopt;

  // Base is finite iff every base variable has a pure power among the leads.
  int base_top = 0;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (c.fiber[i]) continue;
    std::optional<std::uint32_t> power;
    for (const auto& lm : gb.leading_monomials()) {
      bool pure = lm[i] > 0;
      for (std::size_t j = 0; j < lm.size() && pure; ++j) pure = j == i || lm[j] == 0;
      if (pure && (!power || lm[i] < *power)) power = lm[i];
    }
    if (!power) return std::nullopt;
    base_top += static_cast<int>(*power - 1) * sig[i].degree;
  }
  if (gb.valid_through() && base_top > *gb.valid_through()) return std::nullopt;

  UniPoly base;
  for (int d = 0; d <= base_top; d += 2)
    for (const auto& m : monomials_of_degree(sig, d, gb.order())) {
      if (c.fiber_degree(m) != 0 || !gb.is_standard(m)) continue;
      base += UniPoly::monomial(d);
    }

  UniPoly den(1);
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (c.fiber[i]) den *= UniPoly(1) - UniPoly::monomial(sig[i].degree);
  // Pure fiber monomials below the threshold, counted by degree.
  UniPoly low;
  for (int d = 0; d < c.fiber_threshold(); d += 2)
    for (const auto& m : monomials_of_degree(sig, d, gb.order()))
      if (c.fiber_degree(m) == d) low += UniPoly::monomial(d);
  return PoincareSeries(base, UniPoly(1)) *
         (PoincareSeries(UniPoly(1), den) - PoincareSeries(low, UniPoly(1)));
}

}  // namespace giq
