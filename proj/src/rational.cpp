#include "mitosiskit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mitosiskit {

std::string rational_to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(s)) {
      throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  const Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rational(Integer(num)) / Rational(d);
}

Integer lcm_integer(const Integer& a, const Integer& b) {
  using boost::multiprecision::gcd;
  if (a == 0 || b == 0) return 0;
  Integer g = gcd(a, b);
  Integer r = (a / g) * b;
  if (r < 0) r = -r;
  return r;
}

}  // namespace mitosiskit
