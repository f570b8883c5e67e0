#include "giq/series.hpp"

#include <algorithm>

#include "expr_parser.hpp"
#include "giq/errors.hpp"

namespace giq {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(int k, const Rational& c) {
  if (k < 0) throw InputError("negative exponent in t^" + std::to_string(k));
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::geometric(int from, int to, int step) {
  UniPoly p;
  for (int k = from; k <= to; k += step) p += monomial(k);
  return p;
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& q) {
  if (q.c_.size() > c_.size()) c_.resize(q.c_.size());
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] += q.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& q) {
  if (q.c_.size() > c_.size()) c_.resize(q.c_.size());
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] -= q.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& q) {
  if (c_.empty() || q.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += c_[i] * q.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }

UniPoly pow(const UniPoly& a, unsigned k) {
  UniPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= a;
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  Rational lc = x.leading();
  return x * UniPoly(1 / lc);
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += to_string(mag) + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------- series

PoincareSeries::PoincareSeries(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("series with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rational c0 = den_.coefficient(0);
  if (sgn(c0) == 0)
    throw InputError("denominator " + to_string(den_) +
                     " has zero constant term; not a power series");
  if (c0 != 1) {
    UniPoly inv(1 / c0);
    num_ *= inv;
    den_ *= inv;
  }
}

PoincareSeries& PoincareSeries::operator+=(const PoincareSeries& s) {
  *this = PoincareSeries(num_ * s.den_ + s.num_ * den_, den_ * s.den_);
  return *this;
}

PoincareSeries& PoincareSeries::operator-=(const PoincareSeries& s) {
  *this = PoincareSeries(num_ * s.den_ - s.num_ * den_, den_ * s.den_);
  return *this;
}

PoincareSeries& PoincareSeries::operator*=(const PoincareSeries& s) {
  *this = PoincareSeries(num_ * s.num_, den_ * s.den_);
  return *this;
}

PoincareSeries PoincareSeries::operator-() const { return PoincareSeries(-num_, den_); }

PoincareSeries operator+(PoincareSeries a, const PoincareSeries& b) { return a += b; }
PoincareSeries operator-(PoincareSeries a, const PoincareSeries& b) { return a -= b; }
PoincareSeries operator*(PoincareSeries a, const PoincareSeries& b) { return a *= b; }

PoincareSeries operator/(const PoincareSeries& a, const PoincareSeries& b) {
  if (b.numerator().is_zero()) throw InputError("series division by zero");
  return PoincareSeries(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

PoincareSeries shift(const PoincareSeries& s, int k) {
  return PoincareSeries(s.numerator() * UniPoly::monomial(k), s.denominator());
}

std::vector<Rational> expand(const PoincareSeries& s, int order) {
  if (order < 0) throw InputError("expand: negative order");
  const UniPoly& n = s.numerator();
  const UniPoly& d = s.denominator();
  if (sgn(d.coefficient(0)) == 0)
    throw InputError("expand: denominator has zero constant term");
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  Rational d0 = d.coefficient(0);
  for (int k = 0; k <= order; ++k) {
    Rational acc = n.coefficient(k);
    for (int j = 1; j <= std::min(k, d.degree()); ++j)
      acc -= d.coefficient(j) * a[static_cast<std::size_t>(k - j)];
    a[static_cast<std::size_t>(k)] = acc / d0;
  }
  return a;
}

std::string to_string(const PoincareSeries& s) {
  if (s.is_polynomial()) return to_string(s.numerator());
  return "(" + to_string(s.numerator()) + ") / (" + to_string(s.denominator()) + ")";
}

namespace {

struct SeriesAlgebra {
  using Value = PoincareSeries;
  Value number(const Integer& n) { return PoincareSeries(UniPoly(Rational(n))); }
  Value variable(std::string_view name, std::size_t) {
    if (name != "t") throw InputError("series use the variable t, not '" + std::string(name) + "'");
    return PoincareSeries(UniPoly::monomial(1));
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) { return a / b; }
  Value pow(const Value& a, unsigned k) {
    return PoincareSeries(giq::pow(a.numerator(), k), giq::pow(a.denominator(), k));
  }
  Value neg(const Value& a) { return -a; }
};

}  // namespace

PoincareSeries parse_series(std::string_view text) {
  SeriesAlgebra algebra;
  detail::ExprParser<SeriesAlgebra> parser(text, algebra);
  return parser.parse();
}

PoincareSeries morse_assemble(const PoincareSeries& ambient,
                              std::span<const Stratum> strata) {
  PoincareSeries out = ambient;
  for (const auto& s : strata) {
    if (s.codim <= 0 || s.codim % 2 != 0)
      throw InputError("stratum codimension " + std::to_string(s.codim) +
                       " must be positive and even");
    out -= shift(s.factor, s.codim);
  }
  return out;
}

// ---------------------------------------------------------------- Betti

int BettiPolynomial::top_degree() const {
  for (std::size_t k = coefficients.size(); k-- > 0;)
    if (coefficients[k] != 0) return static_cast<int>(2 * k);
  return -1;
}

BettiPolynomial to_betti(const PoincareSeries& s) {
  if (!s.is_polynomial())
    throw IntegrityError("series " + to_string(s) + " is not a polynomial");
  BettiPolynomial b;
  const auto& c = s.numerator().coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (sgn(c[k]) != 0) throw IntegrityError("odd-degree term in Betti polynomial");
      continue;
    }
    long long v = to_int64(c[k]);
    if (v < 0) throw IntegrityError("negative Betti number in " + to_string(s));
    b.coefficients.push_back(v);
  }
  return b;
}

std::string to_string(const BettiPolynomial& b) {
  std::string s = "[";
  for (std::size_t k = 0; k < b.coefficients.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(b.coefficients[k]);
  }
  return s + "]";
}

bool palindrome_check(const BettiPolynomial& b, int dim) {
  if (dim < 0) return false;
  int top = b.top_degree();
  if (top > dim) return false;
  auto at = [&](int d) -> long long {
    if (d < 0 || d % 2 != 0) return 0;
    std::size_t k = static_cast<std::size_t>(d / 2);
    return k < b.coefficients.size() ? b.coefficients[k] : 0;
  };
  for (int d = 0; d <= dim; ++d)
    if (at(d) != at(dim - d)) return false;
  return true;
}

}  // namespace giq
