#include "giq/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "expr_parser.hpp"
#include "giq/errors.hpp"

namespace giq {

// ---------------------------------------------------------------- signature

RingSignature::RingSignature(std::vector<Variable> variables)
    : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.name.empty() || !std::isalpha(static_cast<unsigned char>(v.name[0])))
      throw InputError("invalid variable name '" + v.name + "'");
    for (char c : v.name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InputError("invalid variable name '" + v.name + "'");
    if (!seen.insert(v.name).second)
      throw InputError("duplicate variable '" + v.name + "'");
    if (v.degree < 2 || v.degree % 2 != 0)
      throw InputError("variable '" + v.name + "' has degree " +
                       std::to_string(v.degree) + "; degrees must be even and >= 2");
  }
}

std::optional<std::size_t> RingSignature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

SignaturePtr make_signature(std::vector<Variable> variables) {
  return std::make_shared<const RingSignature>(std::move(variables));
}

// ---------------------------------------------------------------- monomials

int monomial_degree(const RingSignature& sig, const Exponents& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    d += static_cast<int>(e[i]) * sig[i].degree;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      throw InputError("variable precedence is not a permutation");
}

MonomialOrder MonomialOrder::natural(OrderKind kind, std::size_t variables) {
  std::vector<std::size_t> p(variables);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(kind, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Exponents& a,
                                            const Exponents& b) const {
  if (kind_ == OrderKind::grlex) {
    std::uint64_t ta = 0, tb = 0;
    for (auto x : a) ta += x;
    for (auto x : b) tb += x;
    if (ta != tb) return ta <=> tb;
  }
  for (std::size_t v : precedence_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::string to_string(OrderKind kind) {
  return kind == OrderKind::lex ? "lex" : "grlex";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::lex;
  if (text == "grlex") return OrderKind::grlex;
  throw InputError("unknown monomial order '" + std::string(text) +
                   "' (expected lex or grlex)");
}

// ---------------------------------------------------------------- polynomial

GradedPolynomial::GradedPolynomial(SignaturePtr sig) : sig_(std::move(sig)) {}

GradedPolynomial::GradedPolynomial(SignaturePtr sig, TermMap terms)
    : sig_(std::move(sig)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != sig_->size())
      throw InputError("exponent vector length does not match signature");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

GradedPolynomial GradedPolynomial::constant(SignaturePtr sig, const Rational& c) {
  Exponents zero(sig->size(), 0);
  return monomial(std::move(sig), std::move(zero), c);
}

GradedPolynomial GradedPolynomial::variable(SignaturePtr sig, std::size_t index) {
  Exponents e(sig->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(sig), std::move(e), 1);
}

GradedPolynomial GradedPolynomial::monomial(SignaturePtr sig, Exponents e,
                                            const Rational& c) {
  GradedPolynomial p(std::move(sig));
  if (e.size() != p.sig_->size())
    throw InputError("exponent vector length does not match signature");
  if (sgn(c) != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

Rational GradedPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPolynomial::degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int de = monomial_degree(*sig_, e);
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

bool GradedPolynomial::is_homogeneous() const {
  return is_zero() || degree().has_value();
}

int GradedPolynomial::max_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, monomial_degree(*sig_, e));
  return d;
}

std::pair<Exponents, Rational> GradedPolynomial::leading_term(
    const MonomialOrder& order) const {
  if (is_zero()) throw IntegrityError("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

void GradedPolynomial::require_same_ring(const GradedPolynomial& q) const {
  if (sig_ != q.sig_ && !(*sig_ == *q.sig_))
    throw InputError("polynomials live in different rings");
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& q) {
  require_same_ring(q);
  for (const auto& [e, c] : q.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& q) {
  require_same_ring(q);
  for (const auto& [e, c] : q.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

GradedPolynomial GradedPolynomial::pow(unsigned k) const {
  GradedPolynomial result = constant(sig_, 1);
  GradedPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

bool GradedPolynomial::operator==(const GradedPolynomial& q) const {
  return (sig_ == q.sig_ || *sig_ == *q.sig_) && terms_ == q.terms_;
}

GradedPolynomial operator+(GradedPolynomial p, const GradedPolynomial& q) {
  p += q;
  return p;
}

GradedPolynomial operator-(GradedPolynomial p, const GradedPolynomial& q) {
  p -= q;
  return p;
}

GradedPolynomial operator*(const GradedPolynomial& p, const GradedPolynomial& q) {
  return multiply(p, q);
}

GradedPolynomial operator*(GradedPolynomial p, const Rational& c) {
  p *= c;
  return p;
}

GradedPolynomial operator*(const Rational& c, GradedPolynomial p) {
  p *= c;
  return p;
}

GradedPolynomial operator/(GradedPolynomial p, const Rational& c) {
  if (sgn(c) == 0) throw InputError("division by zero");
  p *= 1 / c;
  return p;
}

GradedPolynomial multiply(const GradedPolynomial& p, const GradedPolynomial& q) {
  if (p.signature() != q.signature() && !(*p.signature() == *q.signature()))
    throw InputError("cannot multiply polynomials from different rings");
  GradedPolynomial::TermMap out;
  Exponents e;
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) {
      e = product(ea, eb);
      auto [it, inserted] = out.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return GradedPolynomial(p.signature(), std::move(out));
}

GradedPolynomial graded_component(const GradedPolynomial& p, int d) {
  GradedPolynomial::TermMap out;
  for (const auto& [e, c] : p.terms())
    if (monomial_degree(*p.signature(), e) == d) out.emplace(e, c);
  return GradedPolynomial(p.signature(), std::move(out));
}

// ---------------------------------------------------------------- ring maps

RingMap::RingMap(SignaturePtr source, SignaturePtr target,
                 std::vector<GradedPolynomial> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw InputError("ring map needs one image per source generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (!(*img.signature() == *target_))
      throw InputError("image of '" + (*source_)[i].name +
                       "' is not over the target ring");
    if (img.is_zero()) continue;
    auto d = img.degree();
    if (!d || *d != (*source_)[i].degree)
      throw InputError("image of '" + (*source_)[i].name +
                       "' must be homogeneous of degree " +
                       std::to_string((*source_)[i].degree));
  }
}

GradedPolynomial apply_map(const RingMap& m, const GradedPolynomial& p) {
  if (!(*p.signature() == *m.source()))
    throw InputError("polynomial is not over the source ring of the map");
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<GradedPolynomial>> powers(m.images().size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const GradedPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedPolynomial::constant(m.target(), 1));
    while (cache.size() <= k) cache.push_back(multiply(cache.back(), m.images()[i]));
    return cache[k];
  };
  GradedPolynomial out(m.target());
  for (const auto& [e, c] : p.terms()) {
    GradedPolynomial term = GradedPolynomial::constant(m.target(), c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] != 0) term = multiply(term, power(i, e[i]));
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- printing

std::string monomial_to_string(const RingSignature& sig, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += sig[i].name;
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const GradedPolynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<const GradedPolynomial::TermMap::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return order.less(b->first, a->first); });
  std::string s;
  bool first = true;
  for (const auto* t : terms) {
    const Rational& c = t->second;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(*p.signature(), t->first);
    if (mono == "1") {
      s += to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += to_string(mag) + "*" + mono;
    }
  }
  return s;
}

std::string to_string(const GradedPolynomial& p) {
  return to_string(p, MonomialOrder::natural(OrderKind::lex, p.signature()->size()));
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyAlgebra {
  using Value = GradedPolynomial;
  SignaturePtr sig;

  Value number(const Integer& n) { return Value::constant(sig, Rational(n)); }
  Value variable(std::string_view name, std::size_t) {
    auto i = sig->index_of(name);
    if (!i) throw InputError("unknown variable '" + std::string(name) + "'");
    return Value::variable(sig, *i);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return multiply(a, b); }
  Value div(const Value& a, const Value& b) {
    if (b.is_zero()) throw InputError("division by zero");
    if (b.term_count() != 1 || monomial_degree(*sig, b.terms().begin()->first) != 0)
      throw InputError("can only divide by a rational constant");
    return a / b.terms().begin()->second;
  }
  Value pow(const Value& a, unsigned k) { return a.pow(k); }
  Value neg(const Value& a) { return -a; }
};

}  // namespace

GradedPolynomial parse_polynomial(std::string_view text, const SignaturePtr& sig) {
  PolyAlgebra algebra{sig};
  detail::ExprParser<PolyAlgebra> parser(text, algebra);
  return parser.parse();
}

}  // namespace giq
