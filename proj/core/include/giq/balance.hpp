#pragma once

#include <span>
#include <string>
#include <vector>

#include "giq/weights.hpp"

namespace giq {

/// Linear data at a fixed locus: a subgroup H acting on the normal slice.
struct SliceSpec {
  std::string label;
  int dim_h = 0;
  RepresentationWeights slice_weights;
  RootData roots;
  /// Refinements for the L-fixed subspaces, checked recursively.
  std::vector<SliceSpec> sub_loci;

  /// Half the real codimension of the slice minus dim H.
  int derived_n_h() const { return slice_weights.total_multiplicity() - dim_h; }
};

struct BalanceViolation {
  std::string label;
  WeightVector beta;
  int lhs = 0;       // 2 n(beta) - dim H/Stab(beta)
  Rational rhs;      // (dim_R W - 2 dim H) / 2
};

struct BalanceVerdict {
  bool passed = true;
  std::vector<BalanceViolation> violations;

  void merge(const BalanceVerdict& other);
};

/// Strict inequality 2n(beta) - dim H/Stab(beta) > (dim_R W - 2 dim H)/2 for
/// every beta in the slice's index set.
BalanceVerdict check_linear_balance(const SliceSpec& slice);

/// Conjunction over every slice and, recursively, every sub-locus.
BalanceVerdict check_weakly_balanced(std::span<const SliceSpec> slices);

}  // namespace giq
