#pragma once

#include <optional>
#include <vector>

#include "giq/linalg.hpp"
#include "giq/truncation.hpp"

namespace giq {

struct PairingBlock {
  int degree = 0;      // i
  int complement = 0;  // top - i
  Matrix matrix;       // dim V^i x dim V^(top-i)
  std::optional<Rational> determinant;  // square blocks only
  std::optional<int> signature;         // square symmetric nondegenerate blocks
};

struct PairingReport {
  int top_degree = 0;
  GradedPolynomial top_class;
  std::vector<PairingBlock> blocks;  // i = 0, 2, ..., i <= top - i
};

/// Largest degree with V^d != 0 within the computed bound.
int top_degree(const VSpace& v);

/// The V^top basis element scaled to leading coefficient 1. Throws
/// IntegrityError unless dim V^top == 1.
GradedPolynomial top_class(const VSpace& v, std::optional<int> top = std::nullopt);

/// Entry (a, b): the multiple of the top class equal to the normal form of
/// basis_a(V^i) * basis_b(V^(top-i)). Throws IntegrityError if a product
/// leaves the span of the top class.
Matrix pairing_matrix(const VSpace& v, int i, std::optional<int> top = std::nullopt);

/// #positive - #negative pivots of a symmetric congruence diagonalization.
/// Throws InputError for a non-symmetric or degenerate matrix.
int signature(const Matrix& m);

PairingReport pairing_report(const VSpace& v, std::optional<int> top = std::nullopt);

}  // namespace giq
