#include <gtest/gtest.h>

#include "giq/errors.hpp"
#include "giq/poly.hpp"
#include "support.hpp"

using namespace giq;

namespace {

SignaturePtr xr() { return make_signature({{"xi", 2}, {"rho", 2}}); }

GradedPolynomial P(const std::string& s, const SignaturePtr& sig) { return parse_polynomial(s, sig); }

}  // namespace

TEST(Rational, ReducedAndParsed) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("6/-4"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_TRUE(is_integer(parse_rational("8/4")));
  EXPECT_EQ(to_int64(Rational(-12)), -12);
  EXPECT_THROW(to_int64(Rational(1, 2)), IntegrityError);
}

TEST(Signature, Validation) {
  EXPECT_THROW(make_signature({{"x", 3}}), InputError);
  EXPECT_THROW(make_signature({{"x", 0}}), InputError);
  EXPECT_THROW(make_signature({{"x", 2}, {"x", 4}}), InputError);
  EXPECT_THROW(make_signature({{"2x", 2}}), InputError);
  auto sig = make_signature({{"a", 2}, {"b_1", 4}});
  EXPECT_EQ(sig->index_of("b_1"), 1u);
  EXPECT_FALSE(sig->index_of("c"));
}

TEST(Poly, Multiply) {
  auto sig = xr();
  EXPECT_EQ(multiply(P("xi - rho", sig), P("xi + rho", sig)), P("xi^2 - rho^2", sig));
  EXPECT_EQ(P("xi^2*(xi - rho)^3", sig), P("xi^5 - 3*xi^4*rho + 3*xi^3*rho^2 - xi^2*rho^3", sig));
  EXPECT_EQ(multiply(P("rho", sig), P("xi^2*rho^3", sig)), P("xi^2*rho^4", sig));
  auto prod = multiply(P("xi + rho", sig), P("xi^3", sig));
  EXPECT_EQ(prod.degree(), 8);
}

TEST(Poly, SignatureMismatch) {
  auto a = P("xi", xr());
  auto b = P("xi", make_signature({{"xi", 2}}));
  EXPECT_THROW(multiply(a, b), InputError);
  EXPECT_THROW(a + b, InputError);
}

TEST(Poly, PrintAndParseRoundTrip) {
  auto sig = make_signature({{"x", 2}, {"y", 2}});
  auto p = P("3/2*x^2*y - y^3", sig);
  auto order = MonomialOrder::natural(OrderKind::lex, 2);
  EXPECT_EQ(to_string(p, order), "3/2*x^2*y - y^3");
  EXPECT_EQ(P(to_string(p, order), sig), p);
  EXPECT_EQ(to_string(GradedPolynomial(sig)), "0");
  EXPECT_EQ(to_string(P("-1", sig), order), "-1");
}

TEST(Poly, ParseErrors) {
  auto sig = xr();
  EXPECT_THROW(P("xi +", sig), InputError);
  EXPECT_THROW(P("zeta", sig), InputError);
  EXPECT_THROW(P("xi / rho", sig), InputError);
  EXPECT_THROW(P("(xi", sig), InputError);
  EXPECT_THROW(P("xi / 0", sig), InputError);
  EXPECT_EQ(P("xi / 2", sig), P("1/2*xi", sig));
}

TEST(Poly, ApplyMap) {
  auto src = make_signature({{"xi1", 2}, {"xi2", 2}, {"rho2", 4}});
  auto tgt = make_signature({{"rho", 2}});
  auto r = GradedPolynomial::variable(tgt, 0);
  RingMap m(src, tgt, {r, -r, r * r});
  EXPECT_EQ(apply_map(m, P("xi1^2", src)), P("rho^2", tgt));
  EXPECT_EQ(apply_map(m, P("xi1^2 - rho2", src)), GradedPolynomial(tgt));
  EXPECT_EQ(apply_map(m, P("xi1*xi2", src)), P("-rho^2", tgt));

  auto sig = xr();
  RingMap id(sig, sig, {P("xi", sig), P("rho", sig)});
  EXPECT_EQ(apply_map(id, P("xi", sig)), P("xi", sig));

  auto primed = make_signature({{"xp", 2}, {"rho", 2}});
  RingMap rename(sig, primed, {P("xp", primed), P("rho", primed)});
  EXPECT_EQ(apply_map(rename, P("xi^3*rho", sig)), P("xp^3*rho", primed));
}

TEST(Poly, RingMapRejectsDegreeChange) {
  auto src = xr();
  auto tgt = make_signature({{"t", 2}});
  EXPECT_THROW(RingMap(src, tgt, {P("t^2", tgt), P("t", tgt)}), InputError);
  EXPECT_THROW(RingMap(src, tgt, {P("t", tgt)}), InputError);
  EXPECT_NO_THROW(RingMap(src, tgt, {GradedPolynomial(tgt), P("t", tgt)}));
}

TEST(Poly, GradedComponent) {
  auto sig = make_signature({{"xi", 2}});
  EXPECT_EQ(graded_component(P("1 + xi + xi^2", sig), 4), P("xi^2", sig));
  auto s2 = xr();
  auto h = P("xi^2*rho^4", s2);
  EXPECT_EQ(graded_component(h, 12), h);
  EXPECT_TRUE(graded_component(h, 10).is_zero());
}

TEST(PolyProperty, RingAxioms) {
  test::Gen g(11);
  auto sig = make_signature({{"a", 2}, {"b", 2}, {"c", 4}});
  for (int trial = 0; trial < 60; ++trial) {
    auto p = g.polynomial(sig, 4, 3);
    auto q = g.polynomial(sig, 4, 3);
    auto r = g.polynomial(sig, 4, 3);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) - q, p);
    Rational c = g.nonzero();
    EXPECT_EQ((p * c) / c, p);
  }
}

TEST(PolyProperty, MapIsHomomorphism) {
  test::Gen g(12);
  auto src = make_signature({{"a", 2}, {"b", 2}, {"c", 4}});
  auto tgt = make_signature({{"u", 2}, {"v", 2}});
  for (int trial = 0; trial < 40; ++trial) {
    RingMap m(src, tgt, {g.homogeneous(tgt, 2, 2), g.homogeneous(tgt, 2, 2), g.homogeneous(tgt, 4, 3)});
    auto p = g.homogeneous(src, 2 * g.integer(0, 3), 3);
    auto q = g.homogeneous(src, 2 * g.integer(0, 3), 3);
    EXPECT_EQ(apply_map(m, p * q), apply_map(m, p) * apply_map(m, q));
    EXPECT_EQ(apply_map(m, p + q), apply_map(m, p) + apply_map(m, q));
  }
}

TEST(PolyProperty, ComponentsSumToWhole) {
  test::Gen g(13);
  auto sig = make_signature({{"a", 2}, {"c", 4}});
  for (int trial = 0; trial < 40; ++trial) {
    auto p = g.polynomial(sig, 8, 3);
    GradedPolynomial sum(sig);
    for (int d = 0; d <= p.max_degree(); d += 2) sum += graded_component(p, d);
    EXPECT_EQ(sum, p);
  }
}
