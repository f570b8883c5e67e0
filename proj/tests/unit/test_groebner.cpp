#include <gtest/gtest.h>

#include "giq/errors.hpp"
#include "giq/groebner.hpp"
#include "support.hpp"

using namespace giq;

namespace {

SignaturePtr xr() { return make_signature({{"xi", 2}, {"rho", 2}}); }
GradedPolynomial P(const std::string& s, const SignaturePtr& sig) { return parse_polynomial(s, sig); }
MonomialOrder lex(std::size_t n) { return MonomialOrder::natural(OrderKind::lex, n); }

std::vector<GradedPolynomial> cstar_relations(const SignaturePtr& sig) {
  return {P("xi^2*(xi - rho)^3", sig), P("xi^2*(xi + rho)^3", sig)};
}

// Codimension of the degree-d part of the ideal, from the spanning set
// {m * r} and a naive rank computation.
long long oracle_quotient_dim(const RingSignature& sig, std::span<const GradedPolynomial> rels,
                              int d, const SignaturePtr& ptr) {
  auto order = lex(sig.size());
  auto monos = monomials_of_degree(sig, d, order);
  test::Rows rows;
  for (const auto& r : rels) {
    auto rd = r.degree();
    if (!rd || *rd > d) continue;
    for (const auto& m : monomials_of_degree(sig, d - *rd, order)) {
      auto prod = GradedPolynomial::monomial(ptr, m) * r;
      std::vector<Rational> row;
      for (const auto& mono : monos) row.push_back(prod.coefficient(mono));
      rows.push_back(row);
    }
  }
  return static_cast<long long>(monos.size() - test::oracle_rank(rows));
}

}  // namespace

TEST(Groebner, CstarGolden) {
  auto sig = xr();
  auto rels = cstar_relations(sig);
  auto gb = buchberger(rels, lex(2));
  std::vector<GradedPolynomial> want = {P("xi^5 + 3*xi^3*rho^2", sig),
                                        P("xi^4*rho + 1/3*xi^2*rho^3", sig),
                                        P("xi^3*rho^3", sig), P("xi^2*rho^5", sig)};
  EXPECT_EQ(gb.elements(), want);
}

TEST(Groebner, SmallExamples) {
  auto sig = xr();
  std::vector<GradedPolynomial> one = {P("xi", sig)};
  EXPECT_EQ(buchberger(one, lex(2)).elements(), one);
  std::vector<GradedPolynomial> two = {P("xi^2 - rho^2", sig), P("xi^2 + rho^2", sig)};
  std::vector<GradedPolynomial> want = {P("xi^2", sig), P("rho^2", sig)};
  EXPECT_EQ(buchberger(two, lex(2)).elements(), want);
}

TEST(Groebner, RejectsInhomogeneous) {
  auto sig = xr();
  std::vector<GradedPolynomial> rels = {P("xi^2 + rho", sig)};
  EXPECT_THROW(buchberger(rels, lex(2)), InputError);
  EXPECT_THROW(QuotientRing(sig, rels, lex(2)), InputError);
}

TEST(Groebner, NormalForms) {
  auto sig = xr();
  QuotientRing q(sig, cstar_relations(sig), lex(2));
  EXPECT_TRUE(q.normal_form(P("xi^2*(xi - rho)^3", sig)).is_zero());
  EXPECT_EQ(q.normal_form(P("xi^4*rho^2", sig)), P("-1/3*xi^2*rho^4", sig));
  EXPECT_TRUE(q.normal_form(P("xi^3*rho^3", sig)).is_zero());
}

TEST(Groebner, NormalMonomials) {
  auto sig = xr();
  QuotientRing q(sig, cstar_relations(sig), lex(2));
  auto mono = [&](std::uint32_t a, std::uint32_t b) { return Exponents{a, b}; };
  EXPECT_EQ(normal_monomials(q, 12), (std::vector<Exponents>{mono(0, 6), mono(1, 5), mono(2, 4)}));
  EXPECT_EQ(normal_monomials(q, 0), std::vector<Exponents>{mono(0, 0)});
  EXPECT_EQ(normal_monomials(q, 2), (std::vector<Exponents>{mono(0, 1), mono(1, 0)}));
}

TEST(Groebner, GradedDimensions) {
  auto sig = xr();
  QuotientRing q(sig, cstar_relations(sig), lex(2));
  // Relations start in degree 10, so nothing is killed through degree 8.
  EXPECT_EQ(graded_dimensions(q, 8), (std::vector<long long>{1, 2, 3, 4, 5}));
  // From degree 14 on the dimension stays at 2, as the equivariant series predicts.
  EXPECT_EQ(graded_dimensions(q, 20), (std::vector<long long>{1, 2, 3, 4, 5, 4, 3, 2, 2, 2, 2}));

  auto rho = make_signature({{"rho", 2}});
  QuotientRing free(rho, {}, lex(1));
  EXPECT_EQ(graded_dimensions(free, 6), (std::vector<long long>{1, 1, 1, 1}));

  auto xi = make_signature({{"xi", 2}});
  QuotientRing trunc(xi, {P("xi^2", xi)}, lex(1));
  EXPECT_EQ(graded_dimensions(trunc, 6), (std::vector<long long>{1, 1, 0, 0}));
}

TEST(Groebner, DegreeBoundIsEnforced) {
  auto sig = xr();
  QuotientRing q(sig, cstar_relations(sig), lex(2), 10);
  EXPECT_NO_THROW(normal_monomials(q, 10));
  EXPECT_THROW(normal_monomials(q, 12), InputError);
  EXPECT_THROW(q.normal_form(P("xi^6", sig)), InputError);
}

TEST(Groebner, TruncatedAgreesWithFullBelowBound) {
  auto sig = xr();
  QuotientRing full(sig, cstar_relations(sig), lex(2));
  QuotientRing cut(sig, cstar_relations(sig), lex(2), 12);
  EXPECT_EQ(graded_dimensions(cut, 12), graded_dimensions(full, 12));
  EXPECT_EQ(cut.normal_form(P("xi^4*rho^2", sig)), full.normal_form(P("xi^4*rho^2", sig)));
}

TEST(Groebner, MonomialOrders) {
  auto o = MonomialOrder::natural(OrderKind::grlex, 2);
  EXPECT_TRUE(o.less({3, 0}, {0, 4}));  // total degree first
  EXPECT_TRUE(o.less({1, 2}, {2, 1}));
  auto l = lex(2);
  EXPECT_TRUE(l.less({0, 4}, {1, 0}));
  MonomialOrder rev(OrderKind::lex, {1, 0});
  EXPECT_TRUE(rev.less({1, 0}, {0, 1}));
  EXPECT_THROW(MonomialOrder(OrderKind::lex, {0, 0}), InputError);
}

// ---------------------------------------------------------------- properties

namespace {

struct RandomIdeal {
  SignaturePtr sig;
  std::vector<GradedPolynomial> relations;
};

RandomIdeal random_ideal(test::Gen& g) {
  RandomIdeal out;
  if (g.coin()) {
    out.sig = make_signature({{"a", 2}, {"b", 2}, {"c", 2}});
  } else {
    out.sig = make_signature({{"a", 2}, {"b", 2}, {"c", 4}});
  }
  int count = g.integer(1, 3);
  for (int i = 0; i < count; ++i) {
    auto p = g.homogeneous(out.sig, 2 * g.integer(1, 3), 3);
    if (!p.is_zero()) out.relations.push_back(p);
  }
  if (out.relations.empty()) out.relations.push_back(GradedPolynomial::variable(out.sig, 0).pow(2));
  return out;
}

std::vector<MonomialOrder> all_orders(std::size_t n) {
  std::vector<MonomialOrder> out;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    out.emplace_back(OrderKind::lex, perm);
    out.emplace_back(OrderKind::grlex, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST(GroebnerProperty, BasisIsReducedAndGeneratesTheIdeal) {
  test::Gen g(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto ideal = random_ideal(g);
    auto order = lex(3);
    auto gb = buchberger(ideal.relations, order);
    for (const auto& r : ideal.relations) EXPECT_TRUE(normal_form(r, gb).is_zero());
    const auto& el = gb.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      EXPECT_EQ(el[i].leading_term(order).second, 1);
      for (std::size_t j = 0; j < el.size(); ++j) {
        if (i != j) {
          for (const auto& [e, c] : el[j].terms())
            EXPECT_FALSE(divides(gb.leading_monomials()[i], e));
        }
        if (i < j) EXPECT_TRUE(normal_form(s_polynomial(el[i], el[j], order), gb).is_zero());
      }
    }
  }
}

TEST(GroebnerProperty, DimensionsMatchSpanOracle) {
  test::Gen g(22);
  for (int trial = 0; trial < 20; ++trial) {
    auto ideal = random_ideal(g);
    QuotientRing q(ideal.sig, ideal.relations, lex(3));
    auto dims = graded_dimensions(q, 10);
    for (int d = 0; d <= 10; d += 2)
      EXPECT_EQ(dims[static_cast<std::size_t>(d / 2)],
                oracle_quotient_dim(*ideal.sig, ideal.relations, d, ideal.sig))
          << "degree " << d << " trial " << trial;
  }
}

TEST(GroebnerProperty, DimensionsIgnoreTheOrder) {
  test::Gen g(23);
  for (int trial = 0; trial < 12; ++trial) {
    auto ideal = random_ideal(g);
    std::optional<std::vector<long long>> first;
    for (const auto& order : all_orders(3)) {
      QuotientRing q(ideal.sig, ideal.relations, order);
      auto dims = graded_dimensions(q, 10);
      if (!first) first = dims;
      EXPECT_EQ(dims, *first);
    }
  }
}

TEST(GroebnerProperty, NormalFormIsLinearAndIdempotent) {
  test::Gen g(24);
  auto sig = xr();
  QuotientRing q(sig, cstar_relations(sig), lex(2));
  for (int trial = 0; trial < 50; ++trial) {
    auto p = g.polynomial(sig, 14, 3);
    auto r = g.polynomial(sig, 14, 3);
    Rational c = g.rational();
    auto np = q.normal_form(p);
    EXPECT_EQ(q.normal_form(np), np);
    EXPECT_EQ(q.normal_form(p + r * c), np + q.normal_form(r) * c);
    auto pp = g.polynomial(sig, 8, 2);
    auto rr = g.polynomial(sig, 8, 2);
    EXPECT_EQ(q.normal_form(pp * rr), q.normal_form(q.normal_form(pp) * q.normal_form(rr)));
  }
}
