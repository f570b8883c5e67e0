#include "giq/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "giq/errors.hpp"

namespace giq {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return order->less(b, a);
  }
};

using WorkPoly = std::map<Exponents, Rational, Descending>;
using TermList = std::vector<std::pair<Exponents, Rational>>;

// Basis element in the order's term layout, leading term first, monic.
struct Element {
  TermList terms;
  Exponents lead;
  int degree = 0;
};

TermList sorted_terms(const GradedPolynomial& p, const MonomialOrder& order) {
  TermList t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return t;
}

Element make_monic(TermList terms, const RingSignature& sig) {
  Rational lc = terms.front().second;
  if (lc != 1)
    for (auto& [e, c] : terms) c /= lc;
  Element el;
  el.lead = terms.front().first;
  el.degree = monomial_degree(sig, el.lead);
  el.terms = std::move(terms);
  return el;
}

struct Reducer {
  const TermList* terms;
  const Exponents* lead;
};

std::vector<Reducer> reducers_of(const std::vector<Element>& basis) {
  std::vector<Reducer> r;
  r.reserve(basis.size());
  for (const auto& e : basis) r.push_back({&e.terms, &e.lead});
  return r;
}

// f -= coef * x^shift * g
void subtract_multiple(WorkPoly& f, const TermList& g, const Exponents& shift,
                       const Rational& coef) {
  for (const auto& [e, c] : g) {
    Exponents m = product(e, shift);
    auto [it, inserted] = f.try_emplace(std::move(m), -coef * c);
    if (!inserted) {
      it->second -= coef * c;
      if (sgn(it->second) == 0) f.erase(it);
    }
  }
}

// Full reduction of f by the listed elements. Returns the remainder in
// descending order.
TermList reduce(WorkPoly f, const std::vector<Reducer>& basis) {
  TermList remainder;
  while (!f.empty()) {
    auto lt = f.begin();
    const Reducer* divisor = nullptr;
    for (const Reducer& g : basis)
      if (divides(*g.lead, lt->first)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      remainder.emplace_back(lt->first, lt->second);
      f.erase(lt);
      continue;
    }
    Exponents shift = quotient(lt->first, *divisor->lead);
    Rational coef = lt->second;  // divisor is monic
    subtract_multiple(f, *divisor->terms, shift, coef);
  }
  return remainder;
}

WorkPoly to_work(const TermList& t, const MonomialOrder& order) {
  WorkPoly w{Descending{&order}};
  for (const auto& [e, c] : t) w.emplace(e, c);
  return w;
}

WorkPoly to_work(const GradedPolynomial& p, const MonomialOrder& order) {
  WorkPoly w{Descending{&order}};
  for (const auto& [e, c] : p.terms()) w.emplace(e, c);
  return w;
}

WorkPoly spoly(const Element& f, const Element& g, const MonomialOrder& order) {
  Exponents l = lcm(f.lead, g.lead);
  WorkPoly w{Descending{&order}};
  Exponents sf = quotient(l, f.lead);
  for (const auto& [e, c] : f.terms) w.emplace(product(e, sf), c);
  subtract_multiple(w, g.terms, quotient(l, g.lead), Rational(1));
  return w;
}

GradedPolynomial to_poly(const SignaturePtr& sig, const TermList& t) {
  GradedPolynomial::TermMap m(t.begin(), t.end());
  return GradedPolynomial(sig, std::move(m));
}

void collect_monomials(const RingSignature& sig, std::size_t var, int remaining,
                       Exponents& current, std::vector<Exponents>& out) {
  if (var == sig.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  int step = sig[var].degree;
  for (int k = 0; k * step <= remaining; ++k) {
    current[var] = static_cast<std::uint32_t>(k);
    collect_monomials(sig, var + 1, remaining - k * step, current, out);
  }
  current[var] = 0;
}

}  // namespace

// ---------------------------------------------------------------- basis

GroebnerBasis::GroebnerBasis(SignaturePtr sig, MonomialOrder order,
                             std::vector<GradedPolynomial> elements,
                             std::optional<int> valid_through)
    : sig_(std::move(sig)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      valid_through_(valid_through) {
  std::sort(elements_.begin(), elements_.end(), [&](const auto& a, const auto& b) {
    return order_.less(b.leading_term(order_).first, a.leading_term(order_).first);
  });
  for (const auto& g : elements_) {
    TermList t(g.terms().begin(), g.terms().end());
    std::sort(t.begin(), t.end(),
              [&](const auto& a, const auto& b) { return order_.less(b.first, a.first); });
    if (t.front().second != 1)
      throw IntegrityError("Groebner basis element is not monic");
    leading_.push_back(t.front().first);
    term_lists_.push_back(std::move(t));
  }
}

bool GroebnerBasis::is_standard(const Exponents& e) const {
  for (const auto& lm : leading_)
    if (divides(lm, e)) return false;
  return true;
}

GroebnerBasis buchberger(std::span<const GradedPolynomial> relations,
                         const MonomialOrder& order, std::optional<int> degree_bound) {
  if (relations.empty()) throw InputError("buchberger needs at least one relation");
  SignaturePtr sig = relations.front().signature();
  if (order.precedence().size() != sig->size())
    throw InputError("monomial order does not match the ring's variable count");

  std::vector<Element> basis;
  for (const auto& r : relations) {
    if (!(*r.signature() == *sig))
      throw InputError("relations must share one signature");
    if (!r.is_homogeneous())
      throw InputError("relation '" + to_string(r) + "' is not homogeneous");
    if (r.is_zero()) continue;
    if (degree_bound && *r.degree() > *degree_bound) continue;
    basis.push_back(make_monic(sorted_terms(r, order), *sig));
  }

  // Pending pairs keyed by (lcm degree, lcm, i, j); the lcm compares in the
  // active order.
  struct PairKey {
    int degree;
    Exponents lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Exponents l = lcm(basis[i].lead, basis[k].lead);
      int d = monomial_degree(*sig, l);
      if (degree_bound && d > *degree_bound) continue;
      queue.insert(PairKey{d, std::move(l), i, k});
      pending.emplace(i, k);
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs(k);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    PairKey p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const Element& f = basis[p.i];
    const Element& g = basis[p.j];
    if (coprime(f.lead, g.lead)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis[k].lead, p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k))
        chain = true;
    }
    if (chain) continue;

    TermList h = reduce(spoly(f, g, order), reducers_of(basis));
    if (h.empty()) continue;
    basis.push_back(make_monic(std::move(h), *sig));
    add_pairs(basis.size() - 1);
  }

  // Minimalize, then tail-reduce each survivor against the others.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lead, basis[i].lead)) continue;
      // Equal leads: keep the earliest.
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<GradedPolynomial> reduced;
  for (std::size_t i : keep) {
    std::vector<Reducer> others;
    for (std::size_t j : keep)
      if (j != i) others.push_back({&basis[j].terms, &basis[j].lead});
    TermList tail(basis[i].terms.begin() + 1, basis[i].terms.end());
    TermList rest = reduce(to_work(tail, order), others);
    TermList full;
    full.emplace_back(basis[i].lead, Rational(1));
    full.insert(full.end(), rest.begin(), rest.end());
    reduced.push_back(to_poly(sig, full));
  }
  return GroebnerBasis(sig, order, std::move(reduced), degree_bound);
}

GradedPolynomial normal_form(const GradedPolynomial& p, const GroebnerBasis& gb) {
  if (!(*p.signature() == *gb.signature()))
    throw InputError("normal_form: polynomial and basis are over different rings");
  if (gb.valid_through() && !p.is_zero() && p.max_degree() > *gb.valid_through())
    throw InputError("normal_form: degree " + std::to_string(p.max_degree()) +
                     " exceeds the basis bound " + std::to_string(*gb.valid_through()));
  std::vector<Reducer> reducers;
  reducers.reserve(gb.term_lists().size());
  for (std::size_t i = 0; i < gb.term_lists().size(); ++i)
    reducers.push_back({&gb.term_lists()[i], &gb.leading_monomials()[i]});
  return to_poly(p.signature(), reduce(to_work(p, gb.order()), reducers));
}

GradedPolynomial s_polynomial(const GradedPolynomial& f, const GradedPolynomial& g,
                              const MonomialOrder& order) {
  Element ef = make_monic(sorted_terms(f, order), *f.signature());
  Element eg = make_monic(sorted_terms(g, order), *g.signature());
  WorkPoly w = spoly(ef, eg, order);
  TermList t(w.begin(), w.end());
  return to_poly(f.signature(), t);
}

std::vector<Exponents> monomials_of_degree(const RingSignature& sig, int d,
                                           const MonomialOrder& order) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents current(sig.size(), 0);
  collect_monomials(sig, 0, d, current, out);
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.less(a, b); });
  return out;
}

// ---------------------------------------------------------------- quotient

QuotientRing::QuotientRing(SignaturePtr sig, std::vector<GradedPolynomial> relations,
                           MonomialOrder order, std::optional<int> degree_bound)
    : sig_(sig),
      relations_(std::move(relations)),
      gb_([&] {
        for (const auto& r : relations_) {
          if (!(*r.signature() == *sig))
            throw InputError("relation is not over the ring's signature");
          if (!r.is_homogeneous())
            throw InputError("relation '" + to_string(r) + "' is not homogeneous");
        }
        std::vector<GradedPolynomial> nonzero;
        for (const auto& r : relations_)
          if (!r.is_zero()) nonzero.push_back(r);
        if (nonzero.empty())
          return GroebnerBasis(sig, order, {}, degree_bound);
        return buchberger(nonzero, order, degree_bound);
      }()) {}

std::vector<Exponents> normal_monomials(const QuotientRing& q, int d) {
  const auto& gb = q.groebner();
  if (gb.valid_through() && d > *gb.valid_through())
    throw InputError("normal_monomials: degree " + std::to_string(d) +
                     " exceeds the basis bound");
  std::vector<Exponents> out;
  for (auto& m : monomials_of_degree(*q.signature(), d, q.order()))
    if (gb.is_standard(m)) out.push_back(std::move(m));
  return out;
}

std::vector<long long> graded_dimensions(const QuotientRing& q, int bound) {
  if (bound < 0) throw InputError("graded_dimensions: negative bound");
  std::vector<long long> dims;
  for (int d = 0; d <= bound; d += 2)
    dims.push_back(static_cast<long long>(normal_monomials(q, d).size()));
  return dims;
}

}  // namespace giq
