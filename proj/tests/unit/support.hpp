#pragma once

// Shared generators and reference implementations for the unit tests. The
// oracles here are deliberately naive and share no code with the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "giq/poly.hpp"
#include "giq/rational.hpp"
#include "giq/weights.hpp"

namespace giq::test {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int num = 5, int den = 4) {
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }

  Rational nonzero(int num = 5, int den = 4) {
    for (;;) {
      Rational q = rational(num, den);
      if (sgn(q) != 0) return q;
    }
  }

  /// Homogeneous polynomial of degree d with at most `terms` terms.
  GradedPolynomial homogeneous(const SignaturePtr& sig, int d, int terms) {
    GradedPolynomial p(sig);
    for (int t = 0; t < terms; ++t) {
      Exponents e(sig->size(), 0);
      if (!fill(*sig, e, 0, d)) continue;
      p += GradedPolynomial::monomial(sig, e, rational());
    }
    return p;
  }

  /// Sum of homogeneous parts of degrees 0, 2, ..., max_d.
  GradedPolynomial polynomial(const SignaturePtr& sig, int max_d, int terms) {
    GradedPolynomial p(sig);
    for (int d = 0; d <= max_d; d += 2) p += homogeneous(sig, d, terms);
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  // Random exponent vector of degree exactly d; false if none exists.
  bool fill(const RingSignature& sig, Exponents& e, std::size_t from, int d) {
    if (d == 0) return true;
    std::vector<std::size_t> usable;
    for (std::size_t i = from; i < sig.size(); ++i)
      if (sig[i].degree <= d) usable.push_back(i);
    while (d > 0) {
      std::vector<std::size_t> ok;
      for (auto i : usable)
        if (sig[i].degree <= d) ok.push_back(i);
      if (ok.empty()) return false;
      auto i = ok[static_cast<std::size_t>(integer(0, static_cast<int>(ok.size()) - 1))];
      ++e[i];
      d -= sig[i].degree;
    }
    return true;
  }

  std::mt19937 rng_;
};

using Rows = std::vector<std::vector<Rational>>;

/// Plain Gauss-Jordan rank over Q.
inline std::size_t oracle_rank(Rows a) {
  std::size_t r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Laplace expansion along the first row.
inline Rational oracle_det(const Rows& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    Rows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Rational term = a[0][j] * oracle_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Solves a square system by plain elimination; empty when singular.
inline std::optional<std::vector<Rational>> solve(Rows a, std::vector<Rational> b) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Projects the origin onto the affine hull of every affinely independent
// subset, keeps the projections inside their simplex, returns the nearest.
inline WeightVector brute_force_min_norm(const std::vector<WeightVector>& pts) {
  std::size_t n = pts.size();
  std::size_t dim = pts[0].size();
  std::optional<WeightVector> best;
  Rational best_norm;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::size_t k = idx.size();
    if (k > dim + 1) continue;
    // Lagrange system [G 1; 1^T 0] [lambda; mu] = [0; 1].
    Rows a(k + 1, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(pts[idx[i]], pts[idx[j]]);
      a[i][k] = 1;
      a[k][i] = 1;
    }
    std::vector<Rational> b(k + 1);
    b[k] = 1;
    auto sol = solve(a, b);
    if (!sol) continue;
    bool inside = true;
    for (std::size_t i = 0; i < k; ++i) inside = inside && sgn((*sol)[i]) >= 0;
    if (!inside) continue;
    WeightVector x(dim);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < dim; ++c) x[c] += (*sol)[i] * pts[idx[i]][c];
    Rational nrm = dot(x, x);
    if (!best || nrm < best_norm) {
      best = x;
      best_norm = nrm;
    }
  }
  return *best;
}

/// Betti numbers b_0, b_2, ... of the C^* quotient of P^n with weights
/// (+1)^a (0)^b (-1)^a, counted term by term from the Morse stratification
/// with plain integers.
inline std::vector<long long> cstar_betti(int a, int b) {
  int n = 2 * a + b - 1;
  auto clamp = [](int x, int lo, int hi) { return x < lo ? lo : (x > hi ? hi : x); };
  std::vector<long long> out;
  for (int k = 0; k <= n; ++k) {
    int ambient = (k < n ? k : n) + 1;
    int strata = 2 * clamp(k - a - b + 1, 0, a);
    int tail = clamp(k - a + 1, 0, b);
    out.push_back(ambient - strata - tail);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Same for SL(2) on 2n points of P^1.
inline std::vector<long long> sl2_betti(int n) {
  int m = 2 * n;
  std::vector<long long> binom(static_cast<std::size_t>(m + 1), 1);
  for (int j = 1; j <= m; ++j) binom[static_cast<std::size_t>(j)] =
      binom[static_cast<std::size_t>(j - 1)] * (m - j + 1) / j;
  std::vector<long long> out;
  for (int k = 0; k <= m; ++k) {
    long long v = 0;
    for (int j = k % 2; j <= k && j <= m; j += 2) v += binom[static_cast<std::size_t>(j)];
    for (int r = n + 1; r <= m; ++r)
      if (k >= r - 1) v -= binom[static_cast<std::size_t>(r)];
    if (k >= n - 1) v -= binom[static_cast<std::size_t>(n)] / 2;
    out.push_back(v);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace giq::test
