#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "giq/rational.hpp"

namespace giq {

/// Polynomial in one variable t; coefficients ascending, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * t^k
  static UniPoly monomial(int k, const Rational& c = 1);
  /// t^from + t^(from+step) + ... + t^to (empty when to < from).
  static UniPoly geometric(int from, int to, int step = 2);

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& q);
  UniPoly& operator-=(const UniPoly& q);
  UniPoly& operator*=(const UniPoly& q);
  UniPoly operator-() const;

  bool operator==(const UniPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const UniPoly& b);
UniPoly pow(const UniPoly& a, unsigned k);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic greatest common divisor (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// "1 + 2*t^2 - t^4", ascending powers.
std::string to_string(const UniPoly& p);

/// Reduced rational function num/den in t with den(0) = 1, read as a power
/// series about t = 0.
class PoincareSeries {
 public:
  PoincareSeries() : num_(0), den_(1) {}
  PoincareSeries(UniPoly num, UniPoly den);
  PoincareSeries(UniPoly num)  // NOLINT(google-explicit-constructor)
      : PoincareSeries(std::move(num), UniPoly(1)) {}

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_polynomial() const { return den_ == UniPoly(1); }

  PoincareSeries& operator+=(const PoincareSeries& s);
  PoincareSeries& operator-=(const PoincareSeries& s);
  PoincareSeries& operator*=(const PoincareSeries& s);
  PoincareSeries operator-() const;

  bool operator==(const PoincareSeries&) const = default;

 private:
  UniPoly num_;
  UniPoly den_;
};

PoincareSeries operator+(PoincareSeries a, const PoincareSeries& b);
PoincareSeries operator-(PoincareSeries a, const PoincareSeries& b);
PoincareSeries operator*(PoincareSeries a, const PoincareSeries& b);
/// Throws InputError when the quotient is not a power series.
PoincareSeries operator/(const PoincareSeries& a, const PoincareSeries& b);

/// t^k * s
PoincareSeries shift(const PoincareSeries& s, int k);

/// Taylor coefficients through t^order.
std::vector<Rational> expand(const PoincareSeries& s, int order);

/// "(num) / (den)", or just the numerator for a polynomial.
std::string to_string(const PoincareSeries& s);

/// Accepts the same expression grammar as polynomials in the single variable
/// t, with division by any series whose constant term is nonzero.
PoincareSeries parse_series(std::string_view text);

struct Stratum {
  int codim = 0;
  PoincareSeries factor;
};

/// ambient - sum t^codim * factor. Codimensions must be positive and even.
PoincareSeries morse_assemble(const PoincareSeries& ambient,
                              std::span<const Stratum> strata);

/// Betti numbers in even degrees: coefficients[k] = b_{2k}.
struct BettiPolynomial {
  std::vector<long long> coefficients;

  int top_degree() const;  // -1 when all zero
  bool operator==(const BettiPolynomial&) const = default;
};

/// Requires a polynomial series with nonnegative integer coefficients in even
/// degrees only.
BettiPolynomial to_betti(const PoincareSeries& s);
std::string to_string(const BettiPolynomial& b);  // "[1, 2, 3]"

/// b(d) == b(dim - d) for all d, and nothing above degree dim.
bool palindrome_check(const BettiPolynomial& b, int dim);

}  // namespace giq
