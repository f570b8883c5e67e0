#include <gtest/gtest.h>

#include "giq/errors.hpp"
#include "giq/pairing.hpp"
#include "giq/presets.hpp"
#include "giq/problem.hpp"
#include "support.hpp"

using namespace giq;

namespace {

VSpace v_of(const ProblemSpec& spec) {
  auto ring = build_ring(spec, OrderKind::lex);
  return compute_v(ring, build_constraints(spec, ring, OrderKind::lex), spec.max_degree);
}

Matrix random_symmetric(test::Gen& g, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g.rational();
  return m;
}

test::Rows rows_of(const Matrix& m) {
  test::Rows r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Leading principal minors D_1..D_n, or empty if one of them vanishes.
std::optional<std::vector<Rational>> leading_minors(const Matrix& m) {
  std::vector<Rational> out;
  auto full = rows_of(m);
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    test::Rows sub(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = full[i][j];
    Rational d = test::oracle_det(sub);
    if (sgn(d) == 0) return std::nullopt;
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Pairing, CstarGolden) {
  auto v = v_of(problem_pn_cstar(3, 2, 3));
  EXPECT_EQ(top_degree(v), 12);
  auto report = pairing_report(v);
  EXPECT_EQ(report.top_degree, 12);
  EXPECT_EQ(report.top_class.degree(), 12);
  ASSERT_EQ(report.blocks.size(), 4u);
  std::vector<Rational> dets = {1, Rational(-1, 3), Rational(-8, 27), Rational(-8, 27)};
  std::vector<int> sigs = {1, 0, 1, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& b = report.blocks[k];
    EXPECT_EQ(b.degree, static_cast<int>(2 * k));
    EXPECT_EQ(b.complement, 12 - b.degree);
    ASSERT_TRUE(b.determinant.has_value());
    EXPECT_EQ(*b.determinant, dets[k]) << "block " << b.degree;
    ASSERT_TRUE(b.signature.has_value());
    EXPECT_EQ(*b.signature, sigs[k]) << "block " << b.degree;
  }
}

TEST(Pairing, ComplementaryBlocksAreTransposes) {
  for (const auto& spec : {problem_pn_cstar(3, 2, 3), problem_p1_sl2(3)}) {
    auto v = v_of(spec);
    int top = top_degree(v);
    for (int i = 0; i <= top; i += 2)
      EXPECT_EQ(pairing_matrix(v, top - i), pairing_matrix(v, i).transpose()) << spec.name;
  }
}

TEST(Pairing, Sl2BlocksAreNondegenerate) {
  auto v = v_of(problem_p1_sl2(3));
  auto report = pairing_report(v);
  EXPECT_EQ(report.top_degree, 6);
  for (const auto& b : report.blocks) {
    ASSERT_TRUE(b.determinant.has_value());
    EXPECT_NE(sgn(*b.determinant), 0) << "block " << b.degree;
  }
}

TEST(Pairing, TopClassNeedsOneDimension) {
  auto spec = problem_pn_cstar(3, 2, 3);
  auto ring = build_ring(spec, OrderKind::lex);
  // Without constraints degree 14 of the ring is two-dimensional.
  auto v = compute_v(ring, {}, 14);
  EXPECT_EQ(top_degree(v), 14);
  EXPECT_THROW(top_class(v), IntegrityError);
  EXPECT_THROW(pairing_matrix(v, 0), IntegrityError);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(Matrix{{1, 0}, {0, -1}}), 0);
  EXPECT_EQ(signature(Matrix{{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(signature(Matrix::identity(3)), 3);
  EXPECT_EQ(signature(Matrix{{-2}}), -1);
  EXPECT_EQ(signature(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), 1);
  EXPECT_EQ(signature(Matrix(0, 0)), 0);
  EXPECT_THROW(signature(Matrix{{1, 2}, {3, 4}}), InputError);
  EXPECT_THROW(signature(Matrix{{1, 1}, {1, 1}}), InputError);
  EXPECT_THROW(signature(Matrix(2, 3)), InputError);
}

TEST(SignatureProperty, CongruenceInvariant) {
  test::Gen g(81);
  int checked = 0;
  while (checked < 50) {
    auto n = static_cast<std::size_t>(g.integer(1, 4));
    Matrix m = random_symmetric(g, n);
    if (sgn(determinant(m)) == 0) continue;
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = g.rational();
    if (sgn(determinant(p)) == 0) continue;
    EXPECT_EQ(signature(p.transpose() * m * p), signature(m));
    ++checked;
  }
}

TEST(SignatureProperty, MatchesSylvesterMinorRule) {
  test::Gen g(82);
  int checked = 0;
  while (checked < 60) {
    auto n = static_cast<std::size_t>(g.integer(1, 5));
    Matrix m = random_symmetric(g, n);
    auto minors = leading_minors(m);
    if (!minors) continue;
    // Each sign change in 1, D_1, ..., D_n marks a negative eigenvalue.
    int changes = 0;
    int prev = 1;
    for (const auto& d : *minors) {
      if (sgn(d) != prev) ++changes;
      prev = sgn(d);
    }
    EXPECT_EQ(signature(m), static_cast<int>(n) - 2 * changes);
    ++checked;
  }
}
