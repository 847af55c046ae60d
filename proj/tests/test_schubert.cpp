#include "doctest.h"

#include "mitosiskit/errors.hpp"
#include "mitosiskit/families.hpp"
#include "mitosiskit/schubert.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

#include <map>
#include <vector>

using namespace mitosiskit;
using testutil::vec;

namespace {
std::map<SignedPerm, Rational> as_map(
    const std::vector<std::pair<SignedPerm, Rational>>& v) {
  return {v.begin(), v.end()};
}
}  // namespace

TEST_CASE("volume polynomials match iterated integration, type A") {
  FamilyModel m2(build_family(FamilyKind::GZ_A, 2));
  MultiPoly expected2(2);
  expected2.add_term({1, 0}, 1);
  expected2.add_term({0, 1}, -1);
  CHECK(m2.volume_polynomial() == expected2);
  CHECK(m2.volume_polynomial() == oracles::gz_a_volume_by_integration(2));

  FamilyModel m3(build_family(FamilyKind::GZ_A, 3));
  CHECK(m3.volume_polynomial() == oracles::gz_a_volume_by_integration(3));
}

TEST_CASE("volume polynomial matches iterated integration, sgz(2)") {
  FamilyModel m(build_family(FamilyKind::SGZ, 2));
  MultiPoly expected(2);
  expected.add_term({3, 1}, Rational(1, 6));
  expected.add_term({1, 3}, Rational(-1, 6));
  CHECK(m.volume_polynomial() == expected);
  CHECK(m.volume_polynomial() == oracles::sgz_volume_by_integration(2));
}

TEST_CASE("half-integral lattice quadruples the sgz(2) volume polynomial") {
  FamilyModel sgz(build_family(FamilyKind::SGZ, 2));
  FamilyModel ogz(build_family(FamilyKind::OGZ, 2));
  CHECK(ogz.volume_polynomial() == sgz.volume_polynomial() * Rational(4));
}

TEST_CASE("volume routes agree on specialized members") {
  for (auto kind : {FamilyKind::GZ_A, FamilyKind::SGZ}) {
    auto fam = build_family(kind, kind == FamilyKind::GZ_A ? 3 : 2);
    auto sp = specialize(fam, fam.reference_params());
    auto whole = whole_polytope_face(sp.poly);
    CHECK(lattice_volume(sp.poly, fam.lattice, whole) ==
          lattice_volume_boundary_cone(sp.poly, fam.lattice, whole));
  }
}

TEST_CASE("degenerate members evaluate to zero volume") {
  FamilyModel m(build_family(FamilyKind::GZ_A, 3));
  CHECK(m.polytope_volume(vec({Rational(1), Rational(0), Rational(0)})) == 0);
  // Vertices always report volume one, whatever the member.
  auto vertex_active = m.family().realize_active_set(
      m.family().distinguished_vertex_face());
  CHECK(m.face_volume(vertex_active, m.family().reference_params()) == 1);
}

TEST_CASE("degree checks, type A") {
  FamilyModel m(build_family(FamilyKind::GZ_A, 3));
  const RootSystem& rs = m.family().root_system();

  auto full = degree_check(m, rs.longest_element());
  CHECK(full.ell == 3);
  CHECK(full.polynomials_match);
  CHECK(full.all_rows_match);
  // Scaled face volume equals the degree at a pinned dominant weight.
  Vec lam = vec({Rational(3), Rational(0), Rational(-3)});
  CHECK(full.degree_side.eval(lam) == Rational(162));
  CHECK(full.volume_side.eval(lam) == Rational(162));

  for (const std::vector<int>& word :
       {std::vector<int>{1, 2}, std::vector<int>{2, 1}, std::vector<int>{1},
        std::vector<int>{2}, std::vector<int>{}}) {
    auto rep = degree_check_for_word(m, word);
    CAPTURE(word.size());
    CHECK(rep.polynomials_match);
    CHECK(rep.all_rows_match);
    CHECK(rep.rows.size() == 5);
  }
}

TEST_CASE("degree checks, ddo-c2") {
  FamilyModel m(build_family(FamilyKind::DDO_C2, 2));
  for (const std::vector<int>& word :
       {std::vector<int>{1, 2, 1, 2}, std::vector<int>{2, 1, 2},
        std::vector<int>{1, 2}, std::vector<int>{2}, std::vector<int>{}}) {
    auto rep = degree_check_for_word(m, word);
    CAPTURE(word.size());
    CHECK(rep.polynomials_match);
    CHECK(rep.all_rows_match);
  }
}

TEST_CASE("degree checks, sgz(2) single letters pin the two edges") {
  FamilyModel m(build_family(FamilyKind::SGZ, 2));
  // User label 1 is the long simple root with coroot e_2.
  auto r1 = degree_check_for_word(m, {1});
  MultiPoly l1 = MultiPoly::variable(2, 0), l2 = MultiPoly::variable(2, 1);
  CHECK(r1.polynomials_match);
  CHECK(r1.degree_side == l2);
  auto r2 = degree_check_for_word(m, {2});
  CHECK(r2.polynomials_match);
  CHECK(r2.degree_side == l1 - l2);
}

TEST_CASE("structure constants on gz-a(3)") {
  FamilyModel m(build_family(FamilyKind::GZ_A, 3));
  const RootSystem& rs = m.family().root_system();
  const SignedPerm s1 = rs.element_of_word({1});
  const SignedPerm s2 = rs.element_of_word({2});
  const SignedPerm u = rs.element_of_word({1, 2});
  const SignedPerm v = rs.element_of_word({2, 1});
  const SignedPerm w0 = rs.longest_element();

  auto rep = structure_constants(m, u, v);
  CHECK(rep.target_length == 1);
  CHECK_FALSE(rep.zero_by_grading);
  CHECK(as_map(rep.constants) ==
        std::map<SignedPerm, Rational>{{s1, 1}, {s2, 1}});
  CHECK(rep.intersection_faces.size() == 2);

  auto top = structure_constants(m, w0, w0);
  CHECK(top.target_length == 3);
  CHECK(as_map(top.constants) == std::map<SignedPerm, Rational>{{w0, 1}});

  auto dual = structure_constants(m, w0, s1);
  CHECK(as_map(dual.constants) == std::map<SignedPerm, Rational>{{s1, 1}});

  auto zero = structure_constants(m, s1, s2);
  CHECK(zero.zero_by_grading);
  CHECK(zero.constants.empty());

  CHECK_THROWS_AS(structure_constants(m, u, u), TransversalityFailure);
}

TEST_CASE("graded ranks of the volume polynomial") {
  FamilyModel gz3(build_family(FamilyKind::GZ_A, 3));
  CHECK(graded_ring_ranks(gz3) == std::vector<int>{1, 2, 2, 1});

  FamilyModel sgz2(build_family(FamilyKind::SGZ, 2));
  CHECK(graded_ring_ranks(sgz2) == std::vector<int>{1, 2, 2, 2, 1});

  for (auto* m : {&gz3, &sgz2}) {
    auto ranks = graded_ring_ranks(*m);
    int sum = 0;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      sum += ranks[k];
      CHECK(ranks[k] == ranks[ranks.size() - 1 - k]);
    }
    const auto& rs = m->family().root_system();
    int order = 0;
    for (const auto& bucket : rs.elements_by_length())
      order += static_cast<int>(bucket.size());
    CHECK(sum == order);
  }
}

TEST_CASE("gz-a(4): volume oracle, degree check, graded ranks") {
  FamilyModel m(build_family(FamilyKind::GZ_A, 4));
  CHECK(m.volume_polynomial() == oracles::gz_a_volume_by_integration(4));

  auto rep = degree_check(m, m.family().root_system().longest_element(), 2);
  CHECK(rep.ell == 6);
  CHECK(rep.polynomials_match);
  CHECK(rep.all_rows_match);

  // Rank vector equals the inversion-count generating function of S_4.
  const auto hist = oracles::length_histogram_sn(4);
  const std::vector<int> ranks = graded_ring_ranks(m);
  CHECK(std::vector<long>(ranks.begin(), ranks.end()) == hist);
}

TEST_CASE("differential operator algebra") {
  const DiffOperator d1 = DiffOperator::partial(2, 0);
  const DiffOperator d2 = DiffOperator::partial(2, 1);
  MultiPoly p(2);
  p.add_term({2, 1}, 3);  // 3 x^2 y
  CHECK((d1 * d2).apply(p) == (d2 * d1).apply(p));
  MultiPoly expect(2);
  expect.add_term({1, 0}, 6);
  CHECK((d1 * d2).apply(p) == expect);
  CHECK((d1 + d2).apply(p) == d1.apply(p) + d2.apply(p));
  CHECK((d1 - d1).apply(p) == MultiPoly(2));
  CHECK(d1.apply(MultiPoly::constant(2, 5)) == MultiPoly(2));
}

TEST_CASE("facet derivatives of the trapezoid volume") {
  FamilyModel m(make_trapezoid_family());

  MultiPoly vol(4);
  vol.add_term({0, 0, 2, 0}, Rational(1, 2));
  vol.add_term({2, 0, 0, 0}, Rational(-1, 2));
  vol.add_term({1, 1, 0, 0}, 1);
  vol.add_term({0, 1, 1, 0}, 1);
  vol.add_term({1, 0, 0, 1}, 1);
  vol.add_term({0, 0, 1, 1}, 1);
  CHECK(m.volume_polynomial() == vol);

  auto d1 = facet_derivative(m, 0);
  auto d2 = facet_derivative(m, 1);
  auto d3 = facet_derivative(m, 2);
  auto d4 = facet_derivative(m, 3);

  CHECK((d1 * d1).apply(vol) == MultiPoly::constant(4, -1));
  CHECK(d2.apply(vol) == d4.apply(vol));
  CHECK((d1 + d2).apply(vol) == d3.apply(vol));
}

TEST_CASE("facet derivatives require simple members with free offsets") {
  FamilyModel gz(build_family(FamilyKind::GZ_A, 3));
  CHECK_THROWS_AS(facet_derivative(gz, 0), NotSimple);

  // Square pyramid: four slanted facets meet at the apex.
  std::vector<Vec> normals(5, Vec::Zero(3));
  normals[0](2) = -1;
  normals[1](0) = 1;
  normals[1](2) = 1;
  normals[2](0) = -1;
  normals[2](2) = 1;
  normals[3](1) = 1;
  normals[3](2) = 1;
  normals[4](1) = -1;
  normals[4](2) = 1;
  Vec ref = Vec::Zero(5);
  for (int f = 1; f < 5; ++f) ref(f) = 1;
  std::vector<Vec> grid;
  for (int a = 0; a <= 1; ++a)
    for (int b = 1; b <= 4; ++b) {
      Vec h = Vec::Zero(5);
      h(0) = a;
      for (int f = 1; f < 5; ++f) h(f) = b;
      grid.push_back(h);
    }
  FamilyModel pyramid(make_offset_family("pyramid", normals, ref, grid));
  CHECK_THROWS_AS(facet_derivative(pyramid, 0), NotSimple);
}

TEST_CASE("conjectured face sets verify for the rank-two symplectic family") {
  auto rep = conjecture_report(2, 3);
  CHECK(rep.n == 2);
  CHECK(rep.entries.size() == 8);
  for (const auto& e : rep.entries) {
    CAPTURE(e.w.to_string());
    CHECK(e.all_rows_match);
    CHECK(e.polynomials_match);
    CHECK(static_cast<int>(e.word.size()) == e.ell);
  }
  CHECK(rep.verified);
}
