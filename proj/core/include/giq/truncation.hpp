#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "giq/groebner.hpp"
#include "giq/linalg.hpp"
#include "giq/series.hpp"

namespace giq {

/// Restriction to one fixed-locus component, followed by discarding
/// everything of low fiber degree. The target is base (x) fiber, split by
/// `fiber`.
struct TruncationConstraint {
  std::string label;
  RingMap restriction;
  QuotientRingPtr target;
  std::vector<bool> fiber;  // one flag per target variable
  int n_h = 0;

  /// Fiber degrees >= this survive into the obstruction: 2 * ceil(n_h / 2).
  int fiber_threshold() const { return 2 * ((n_h + 1) / 2); }
  int fiber_degree(const Exponents& e) const;

  /// Checks the map/target/split consistency; throws InputError.
  void validate(const QuotientRing& source) const;
};

/// Kernel of all truncated restrictions, degree by degree.
class VSpace {
 public:
  VSpace(QuotientRingPtr ring, std::vector<TruncationConstraint> constraints,
         int bound, std::map<int, std::vector<GradedPolynomial>> bases);

  const QuotientRingPtr& ring() const { return ring_; }
  const std::vector<TruncationConstraint>& constraints() const { return constraints_; }
  int bound() const { return bound_; }
  const std::map<int, std::vector<GradedPolynomial>>& bases() const { return bases_; }
  /// Basis of V^d; empty outside [0, bound].
  const std::vector<GradedPolynomial>& basis(int d) const;
  const BettiPolynomial& betti() const { return betti_; }

 private:
  QuotientRingPtr ring_;
  std::vector<TruncationConstraint> constraints_;
  int bound_;
  std::map<int, std::vector<GradedPolynomial>> bases_;
  BettiPolynomial betti_;
};

/// Rows: target standard monomials of degree d with fiber degree at or above
/// the threshold. Columns: source standard monomials of degree d.
Matrix restriction_matrix(const QuotientRing& ring, const TruncationConstraint& c, int d);

/// Same with every target standard monomial of degree d as a row.
Matrix full_restriction_matrix(const QuotientRing& ring, const TruncationConstraint& c,
                               int d);

VSpace compute_v(QuotientRingPtr ring, std::vector<TruncationConstraint> constraints,
                 int bound);

/// True iff the stacked untruncated restriction has full row rank in every
/// degree 2k for k_from <= k <= k_to.
bool verify_restriction_surjectivity(const QuotientRing& ring,
                                     std::span<const TruncationConstraint> constraints,
                                     int k_from, int k_to);

/// Poincare series of the discarded high-fiber part of one target, when the
/// target splits as a finite base ring tensor a free fiber polynomial ring.
/// Empty when the relations touch fiber variables or the base is infinite.
/// Subtracting it is exact only when the restriction is onto that part.
std::optional<PoincareSeries> truncation_tail(const TruncationConstraint& c);

}  // namespace giq
