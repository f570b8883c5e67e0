#include "giq/rational.hpp"

#include <limits>

#include "giq/errors.hpp"

namespace giq {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+'))
      ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw InputError("invalid rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_int64(const Rational& q) {
  if (!is_integer(q))
    throw IntegrityError("expected an integer, got " + to_string(q));
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw IntegrityError("integer overflow: " + n.get_str());
  return n.get_si();
}

}  // namespace giq
