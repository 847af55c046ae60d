#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace mitosiskit {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Canonical form: reduced, "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// Accepts "p" and "p/q" with optional leading sign; throws std::invalid_argument
// on anything else (including q = 0).
Rational rational_from_string(const std::string& s);

Integer lcm_integer(const Integer& a, const Integer& b);

}  // namespace mitosiskit
