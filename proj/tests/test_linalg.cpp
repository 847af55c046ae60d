#include "doctest.h"

#include "mitosiskit/linalg.hpp"
#include "mitosiskit/rational.hpp"
#include "support/test_util.hpp"

using namespace mitosiskit;
using testutil::vec;

TEST_CASE("rational parse and print round trips") {
  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(-7)) == "-7");
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_from_string("3/2") == Rational(3, 2));
  CHECK(rational_from_string("-5") == Rational(-5));
  CHECK(rational_from_string("-6/9") == Rational(-2, 3));
  CHECK(rational_from_string(rational_to_string(Rational(123456789, 987654321))) ==
        Rational(123456789, 987654321));
}

TEST_CASE("exact rank, determinant and solve") {
  Mat a(2, 2);
  a << Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4);
  CHECK(rank_of(a) == 2);
  CHECK(det_of(a) == Rational(1, 12));

  Mat s(2, 2);
  s << Rational(2), Rational(4), Rational(1), Rational(2);
  CHECK(rank_of(s) == 1);
  CHECK(det_of(s) == Rational(0));

  Vec b = vec({Rational(1), Rational(1, 2)});
  auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Vec inconsistent = vec({Rational(1), Rational(1)});
  CHECK_FALSE(solve_exact(s, inconsistent).has_value());
}

TEST_CASE("kernels are exact and saturated") {
  Mat a(1, 3);
  a << Rational(1), Rational(1), Rational(1);
  Mat k = kernel_of(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).isZero());

  IMat c(1, 3);
  c << Integer(2), Integer(-4), Integer(2);
  IMat ik = integer_kernel(c);
  REQUIRE(ik.cols() == 2);
  for (Eigen::Index j = 0; j < ik.cols(); ++j) {
    Integer dot = 0;
    for (Eigen::Index i = 0; i < 3; ++i) dot += c(0, i) * ik(i, j);
    CHECK(dot == 0);
  }
  // The specific lattice vectors (1,1,1) and (1,0,-1) lie in the kernel and
  // must be integer combinations of the basis columns.
  for (auto target : {vec({Rational(1), Rational(1), Rational(1)}),
                      vec({Rational(1), Rational(0), Rational(-1)})}) {
    Mat basis(3, ik.cols());
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < ik.cols(); ++j) basis(i, j) = Rational(ik(i, j));
    auto coeffs = solve_exact(basis.transpose() * basis, basis.transpose() * target);
    REQUIRE(coeffs.has_value());
    CHECK(basis * *coeffs == target);
    for (Eigen::Index j = 0; j < coeffs->size(); ++j)
      CHECK(denominator((*coeffs)(j)) == 1);
  }
}

TEST_CASE("primitive vectors and saturated bases") {
  IVec p = primitive_vector(vec({Rational(2, 3), Rational(-4, 3)}));
  REQUIRE(p.size() == 2);
  CHECK(p(0) == 1);
  CHECK(p(1) == -2);
  CHECK(primitive_vector(vec({Rational(0), Rational(0)})).isZero());

  Mat span(2, 1);
  span << Rational(2), Rational(2);
  Mat sat = saturated_lattice_basis(span);
  REQUIRE(sat.cols() == 1);
  CHECK(sat(0, 0) * sat(0, 0) == Rational(1));  // (1,1) or (-1,-1)
  CHECK(sat(0, 0) == sat(1, 0));

  Mat full(2, 2);
  full << Rational(1), Rational(1), Rational(1), Rational(-1);
  Mat sat2 = saturated_lattice_basis(full);
  REQUIRE(sat2.cols() == 2);
  Rational d = det_of(sat2);
  CHECK(d * d == Rational(1));  // saturation of a full-rank span is Z^2
}
