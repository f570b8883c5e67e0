#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "giq/rational.hpp"

namespace giq {

/// A torus weight; coordinates in a fixed basis of the dual Lie algebra.
using WeightVector = std::vector<Rational>;

Rational dot(const WeightVector& a, const WeightVector& b);
std::string to_string(const WeightVector& w);

struct WeightEntry {
  WeightVector weight;
  int multiplicity = 1;
};

/// Weight multiset of a complex representation (real dimension is twice the
/// total multiplicity).
struct RepresentationWeights {
  std::size_t rank = 0;
  std::vector<WeightEntry> entries;

  int total_multiplicity() const;
  int real_dimension() const { return 2 * total_multiplicity(); }
  /// Checks lengths and multiplicities; throws InputError.
  void validate() const;
};

/// Roots of the acting group and the simple roots cutting out the closed
/// positive chamber. Both empty for a torus.
struct RootData {
  std::vector<WeightVector> roots;
  std::vector<WeightVector> chamber;

  bool abelian() const { return chamber.empty(); }
  bool in_chamber(const WeightVector& beta) const;
  void validate(std::size_t rank) const;
};

/// Convex combination sum_k coeff_k * points[index_k].
using HullCertificate = std::vector<std::pair<std::size_t, Rational>>;

struct MinNormPoint {
  WeightVector point;
  HullCertificate certificate;
};

/// Nearest point to the origin of conv(points), by Wolfe's method in exact
/// arithmetic. Requires a nonempty list of equal-length vectors.
MinNormPoint min_norm_point(std::span<const WeightVector> points);

/// Number of weights (with multiplicity) with <alpha, beta> < <beta, beta>.
int n_of_beta(const RepresentationWeights& rep, const WeightVector& beta);

/// Roots alpha with <alpha, beta> != 0, i.e. dim H/Stab(beta).
int moved_roots(const RootData& roots, const WeightVector& beta);

struct IndexPoint {
  WeightVector beta;
  int n_beta = 0;
  int moved_roots = 0;
  /// 2 n_beta - moved_roots, floored at zero.
  int codim = 0;
  /// Indices refer to rep.entries.
  HullCertificate certificate;

  /// 2 n_beta - moved_roots without the floor.
  int signed_codim() const { return 2 * n_beta - moved_roots; }
};

inline constexpr std::size_t kMaxDistinctWeights = 20;

/// Nonzero min-norm points of the hulls of all nonempty weight subsets that
/// lie in the closed positive chamber, sorted by beta.
std::vector<IndexPoint> index_set(const RepresentationWeights& rep,
                                  const RootData& roots);

}  // namespace giq
