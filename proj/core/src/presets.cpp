#include "giq/presets.hpp"

#include <string>

#include "giq/errors.hpp"

namespace giq {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

PoincareSeries over_one_minus(UniPoly num, int step) {
  return PoincareSeries(std::move(num), UniPoly(1) - UniPoly::monomial(step));
}

void require_cstar(int n_plus, int n_zero, int n_minus) {
  if (n_plus < 1 || n_zero < 1 || n_minus < 1)
    throw InputError("pn-cstar needs n_plus, n_zero, n_minus >= 1");
}

std::vector<Stratum> cstar_strata(int n_plus, int n_zero, int n_minus) {
  return {
      {2 * (n_zero + n_minus), over_one_minus(UniPoly::geometric(0, 2 * n_plus - 2), 2)},
      {2 * (n_zero + n_plus), over_one_minus(UniPoly::geometric(0, 2 * n_minus - 2), 2)},
  };
}

PoincareSeries cstar_ambient(int n) { return over_one_minus(UniPoly::geometric(0, 2 * n), 2); }

TailSpec cstar_tail(int n_zero, int n_minus) {
  return {2 * n_minus, over_one_minus(UniPoly::geometric(0, 2 * n_zero - 2), 2)};
}

std::vector<Stratum> sl2_strata(int n) {
  std::vector<Stratum> out;
  for (int r = n + 1; r <= 2 * n; ++r)
    out.push_back({2 * (r - 1), over_one_minus(UniPoly(Rational(binomial(2 * n, r))), 2)});
  return out;
}

PoincareSeries sl2_ambient(int n) {
  return PoincareSeries(pow(UniPoly(1) + UniPoly::monomial(2), static_cast<unsigned>(2 * n)),
                        UniPoly(1) - UniPoly::monomial(4));
}

TailSpec sl2_tail(int n) {
  Rational half = Rational(binomial(2 * n, n)) / 2;
  return {2 * n - 2, over_one_minus(UniPoly(half), 2)};
}

WeightEntry entry(int w, int mult) { return {{Rational(w)}, mult}; }

}  // namespace

PresetSeries preset_pn_cstar(int n_plus, int n_zero, int n_minus) {
  require_cstar(n_plus, n_zero, n_minus);
  if (n_plus != n_minus)
    throw BalanceError("pn-cstar(" + std::to_string(n_plus) + "," + std::to_string(n_zero) +
                       "," + std::to_string(n_minus) +
                       ") is not weakly balanced: n_plus != n_minus");
  int n = n_plus + n_zero + n_minus - 1;
  auto strata = cstar_strata(n_plus, n_zero, n_minus);
  PoincareSeries eq = morse_assemble(cstar_ambient(n), strata);
  TailSpec tail = cstar_tail(n_zero, n_minus);
  PoincareSeries ip = eq - shift(tail.factor, tail.shift);
  return {eq, ip, to_betti(ip), 2 * n - 2};
}

PresetSeries preset_p1_sl2(int n) {
  if (n < 2) throw InputError("p1-sl2 needs n >= 2");
  PoincareSeries eq = morse_assemble(sl2_ambient(n), sl2_strata(n));
  TailSpec tail = sl2_tail(n);
  PoincareSeries ip = eq - shift(tail.factor, tail.shift);
  return {eq, ip, to_betti(ip), 2 * (2 * n - 3)};
}

ProblemSpec problem_pn_cstar(int n_plus, int n_zero, int n_minus) {
  require_cstar(n_plus, n_zero, n_minus);
  int n = n_plus + n_zero + n_minus - 1;
  ProblemSpec p;
  p.name = "pn-cstar(" + std::to_string(n_plus) + "," + std::to_string(n_zero) + "," +
           std::to_string(n_minus) + ")";
  p.rank = 1;
  p.weights = {1, {entry(1, n_plus), entry(0, n_zero), entry(-1, n_minus)}};

  SliceSpec s1;
  s1.label = "S1";
  s1.dim_h = 1;
  s1.slice_weights = {1, {entry(1, n_plus), entry(-1, n_minus)}};
  p.slices.push_back(s1);

  auto sig = make_signature({{"xi", 2}, {"rho", 2}});
  auto xi = GradedPolynomial::variable(sig, 0);
  auto rho = GradedPolynomial::variable(sig, 1);
  p.ring.signature = sig;
  p.ring.relations = {xi.pow(n_zero) * (xi - rho).pow(n_plus),
                      xi.pow(n_zero) * (xi + rho).pow(n_minus)};
  p.order = OrderKind::lex;

  // The fixed component is P^(n_zero - 1); xp is its hyperplane class.
  auto tsig = make_signature({{"xp", 2}, {"rho", 2}});
  auto xp = GradedPolynomial::variable(tsig, 0);
  ConstraintSpec c;
  c.label = "S1";
  c.slice = "S1";
  c.target = {tsig, {xp.pow(n_zero)}};
  c.fiber = {false, true};
  c.images = {xp, GradedPolynomial::variable(tsig, 1)};
  p.constraints.push_back(c);

  p.series.ambient = cstar_ambient(n);
  p.series.strata = cstar_strata(n_plus, n_zero, n_minus);
  if (n_plus == n_minus) p.series.tails = std::vector<TailSpec>{cstar_tail(n_zero, n_minus)};
  p.dimension = 2 * n - 2;
  p.max_degree = 2 * n;
  return p;
}

ProblemSpec problem_p1_sl2(int n) {
  if (n < 2) throw InputError("p1-sl2 needs n >= 2");
  const int m = 2 * n;
  ProblemSpec p;
  p.name = "p1-sl2(" + std::to_string(n) + ")";
  p.rank = 1;
  p.roots = {{{Rational(2)}, {Rational(-2)}}, {{Rational(2)}}};

  SliceSpec t;
  t.label = "T";
  t.dim_h = 1;
  t.slice_weights = {1, {entry(2, n - 1), entry(-2, n - 1)}};
  p.slices.push_back(t);

  std::vector<Variable> vars;
  for (int j = 1; j <= m; ++j) vars.push_back({"xi" + std::to_string(j), 2});
  vars.push_back({"rho2", 4});
  auto sig = make_signature(vars);
  auto xi = [&](int j) { return GradedPolynomial::variable(sig, static_cast<std::size_t>(j)); };
  auto rho2 = GradedPolynomial::variable(sig, static_cast<std::size_t>(m));
  p.ring.signature = sig;
  for (int j = 0; j < m; ++j) p.ring.relations.push_back(xi(j) * xi(j) - rho2);
  // Closures of the unstable strata are the diagonals where more than n
  // points coincide; their classes generate the kernel to M^ss.
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) <= n) continue;
    int first = __builtin_ctz(mask);
    auto cls = GradedPolynomial::constant(sig, 1);
    for (int i = first + 1; i < m; ++i)
      if (mask & (1u << i)) cls = cls * (xi(i) + xi(first));
    p.ring.relations.push_back(cls);
  }
  p.order = OrderKind::lex;

  // One fixed point q_I per Z/2 orbit: the subsets I of size n containing 1.
  auto tsig = make_signature({{"rho", 2}});
  auto r = GradedPolynomial::variable(tsig, 0);
  for (unsigned mask = 1; mask < (1u << m); mask += 2) {
    if (__builtin_popcount(mask) != n) continue;
    ConstraintSpec c;
    c.label = "I={";
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) c.label += (c.label.size() > 3 ? "," : "") + std::to_string(j + 1);
    c.label += "}";
    c.slice = "T";
    c.target = {tsig, {}};
    c.fiber = {true};
    for (int j = 0; j < m; ++j) c.images.push_back((mask & (1u << j)) ? r : -r);
    c.images.push_back(r * r);
    p.constraints.push_back(std::move(c));
  }

  p.series.ambient = sl2_ambient(n);
  p.series.strata = sl2_strata(n);
  p.series.tails = std::vector<TailSpec>{sl2_tail(n)};
  p.dimension = 2 * (2 * n - 3);
  p.max_degree = *p.dimension + 2;
  return p;
}

}  // namespace giq
