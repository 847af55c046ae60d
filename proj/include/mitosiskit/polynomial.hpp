#pragma once

#include "mitosiskit/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace mitosiskit {

// Sparse multivariate polynomial with rational coefficients. Terms are keyed
// by exponent vectors of fixed length nvars; zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, Exponents e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rational eval(const Vec& point) const;
  MultiPoly derivative(int var) const;
  MultiPoly derivative(const Exponents& order) const;

  // Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return degree() <= 0; }
  Rational constant_value() const;

  // Substitutes polynomial g for variable var (g must have the same nvars).
  MultiPoly substitute(int var, const MultiPoly& g) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

// All exponent vectors of length nvars with the given total degree, in
// lexicographic order.
std::vector<MultiPoly::Exponents> homogeneous_exponents(int nvars, int degree);

// Exact interpolation of a homogeneous degree-d polynomial from point/value
// samples. Requires the points to determine the polynomial uniquely; throws
// InterpolationRankDeficient otherwise and reports the achieved rank.
MultiPoly interpolate_homogeneous(int nvars, int degree, const std::vector<Vec>& points,
                                  const std::vector<Rational>& values);

}  // namespace mitosiskit
