#include <gtest/gtest.h>

#include <algorithm>

#include "giq/errors.hpp"
#include "giq/weights.hpp"
#include "support.hpp"

using namespace giq;

namespace {

WeightVector W(std::initializer_list<int> xs) {
  WeightVector w;
  for (int x : xs) w.push_back(Rational(x));
  return w;
}

RepresentationWeights rep1(std::initializer_list<std::pair<int, int>> entries) {
  RepresentationWeights r{1, {}};
  for (auto [w, m] : entries) r.entries.push_back({W({w}), m});
  return r;
}

void expect_certified(const std::vector<WeightVector>& pts, const MinNormPoint& m) {
  Rational total = 0;
  WeightVector rebuilt(m.point.size());
  for (const auto& [i, c] : m.certificate) {
    EXPECT_GE(sgn(c), 0);
    total += c;
    for (std::size_t k = 0; k < rebuilt.size(); ++k) rebuilt[k] += c * pts[i][k];
  }
  EXPECT_EQ(total, 1);
  EXPECT_EQ(rebuilt, m.point);
  for (const auto& a : pts) {
    WeightVector diff = a;
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= m.point[k];
    EXPECT_GE(sgn(dot(diff, m.point)), 0);
  }
}

std::vector<WeightVector> random_points(test::Gen& g) {
  auto dim = static_cast<std::size_t>(g.integer(1, 3));
  int count = g.integer(1, 8);
  std::vector<WeightVector> pts;
  for (int i = 0; i < count; ++i) {
    WeightVector w;
    for (std::size_t k = 0; k < dim; ++k) w.push_back(g.rational(4, 3));
    pts.push_back(w);
  }
  return pts;
}

}  // namespace

TEST(MinNorm, Examples) {
  std::vector<WeightVector> one = {W({1})};
  EXPECT_EQ(min_norm_point(one).point, W({1}));
  std::vector<WeightVector> seg = {W({1}), W({-1})};
  EXPECT_EQ(min_norm_point(seg).point, W({0}));
  std::vector<WeightVector> diag = {W({2, 1}), W({1, 2})};
  auto m = min_norm_point(diag);
  EXPECT_EQ(m.point, (WeightVector{Rational(3, 2), Rational(3, 2)}));
  expect_certified(diag, m);
}

TEST(MinNorm, RejectsEmptyAndRagged) {
  std::vector<WeightVector> none;
  EXPECT_THROW(min_norm_point(none), InputError);
  std::vector<WeightVector> ragged = {W({1}), W({1, 2})};
  EXPECT_THROW(min_norm_point(ragged), InputError);
}

TEST(MinNormProperty, MatchesFaceProjectionOracle) {
  test::Gen g(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = random_points(g);
    auto m = min_norm_point(pts);
    EXPECT_EQ(m.point, test::brute_force_min_norm(pts)) << "trial " << trial;
    expect_certified(pts, m);
  }
}

TEST(NOfBeta, Counts) {
  EXPECT_EQ(n_of_beta(rep1({{1, 3}, {0, 2}, {-1, 3}}), W({1})), 5);
  EXPECT_EQ(n_of_beta(rep1({{1, 3}, {-1, 3}}), W({1})), 3);
  EXPECT_EQ(n_of_beta(rep1({{2, 1}, {3, 2}}), W({1})), 0);
  EXPECT_THROW(n_of_beta(rep1({{1, 1}}), W({0})), InputError);
}

TEST(IndexSet, CstarOnProjectiveSpace) {
  auto pts = index_set(rep1({{1, 3}, {0, 2}, {-1, 3}}), RootData{});
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].beta, W({-1}));
  EXPECT_EQ(pts[1].beta, W({1}));
  for (const auto& p : pts) {
    EXPECT_EQ(p.n_beta, 5);
    EXPECT_EQ(p.moved_roots, 0);
    EXPECT_EQ(p.codim, 10);
  }
}

TEST(IndexSet, SingleWeight) {
  auto pts = index_set(rep1({{3, 4}}), RootData{});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].beta, W({3}));
  EXPECT_EQ(pts[0].n_beta, 0);
  EXPECT_EQ(pts[0].codim, 0);
}

TEST(IndexSet, CoincidentPointsOnTheLine) {
  RootData sl2{{W({2}), W({-2})}, {W({2})}};
  for (int n = 2; n <= 4; ++n)
    for (int r = n + 1; r < 2 * n; ++r) {
      auto pts = index_set(rep1({{1, 2 * n - r}, {-1, r}}), sl2);
      ASSERT_EQ(pts.size(), 1u);
      EXPECT_EQ(pts[0].beta, W({1}));
      EXPECT_EQ(pts[0].n_beta, r);
      EXPECT_EQ(pts[0].moved_roots, 2);
      EXPECT_EQ(pts[0].codim, 2 * (r - 1));
    }
}

TEST(IndexSet, ChamberFilterAndCertificates) {
  RepresentationWeights rep{2, {{W({1, 0}), 1}, {W({0, 1}), 2}, {W({-1, -1}), 1}}};
  RootData roots{{W({1, -1}), W({-1, 1})}, {W({1, -1})}};
  for (const auto& p : index_set(rep, roots)) {
    EXPECT_GE(sgn(dot(p.beta, W({1, -1}))), 0);
    EXPECT_NE(p.beta, W({0, 0}));
    EXPECT_EQ(p.codim, std::max(0, 2 * p.n_beta - p.moved_roots));
    WeightVector rebuilt(2);
    for (const auto& [i, c] : p.certificate)
      for (std::size_t k = 0; k < 2; ++k) rebuilt[k] += c * rep.entries[i].weight[k];
    EXPECT_EQ(rebuilt, p.beta);
  }
}

TEST(IndexSet, DistinctWeightCap) {
  RepresentationWeights rep{1, {}};
  for (int i = 1; i <= 21; ++i) rep.entries.push_back({W({i}), 1});
  EXPECT_THROW(index_set(rep, RootData{}), InputError);
}

TEST(RootData, Validation) {
  RootData open{{W({2})}, {W({2})}};
  EXPECT_THROW(open.validate(1), InputError);
  RootData no_chamber{{W({2}), W({-2})}, {}};
  EXPECT_THROW(no_chamber.validate(1), InputError);
}

TEST(IndexSetProperty, PermutationInvariant) {
  test::Gen g(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto dim = static_cast<std::size_t>(g.integer(1, 2));
    RepresentationWeights rep{dim, {}};
    int count = g.integer(1, 6);
    for (int i = 0; i < count; ++i) {
      WeightVector w;
      for (std::size_t k = 0; k < dim; ++k) w.push_back(Rational(g.integer(-2, 2)));
      rep.entries.push_back({w, g.integer(1, 3)});
    }
    auto base = index_set(rep, RootData{});
    auto shuffled = rep;
    std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), g.engine());
    auto other = index_set(shuffled, RootData{});
    ASSERT_EQ(base.size(), other.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_EQ(base[i].beta, other[i].beta);
      EXPECT_EQ(base[i].n_beta, other[i].n_beta);
      EXPECT_EQ(base[i].codim, other[i].codim);
    }
  }
}
