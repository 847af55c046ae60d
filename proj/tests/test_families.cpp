#include "doctest.h"

#include "mitosiskit/errors.hpp"
#include "mitosiskit/families.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

#include <algorithm>
#include <set>

using namespace mitosiskit;
using testutil::vec;

namespace {
std::set<std::vector<Rational>> point_set(const std::vector<VertexData>& pts) {
  std::set<std::vector<Rational>> s;
  for (const auto& p : pts) s.insert(from_vec(p.point));
  return s;
}
std::set<std::vector<Rational>> point_set(const std::vector<Vec>& pts) {
  std::set<std::vector<Rational>> s;
  for (const auto& p : pts) s.insert(from_vec(p));
  return s;
}
}  // namespace

TEST_CASE("family inventories") {
  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  CHECK(gz3.dim == 3);
  CHECK(gz3.nparams == 3);
  CHECK(gz3.facets.size() == 6);
  CHECK(gz3.vertex_cone().num_facets() == 3);
  CHECK(gz3.word_pattern == std::vector<int>{1, 2, 1});

  auto gz4 = build_family(FamilyKind::GZ_A, 4);
  CHECK(gz4.dim == 6);
  CHECK(gz4.facets.size() == 12);
  CHECK(gz4.word_pattern == std::vector<int>{1, 2, 1, 3, 2, 1});

  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  CHECK(sgz2.dim == 4);
  CHECK(sgz2.facets.size() == 8);
  CHECK(sgz2.vertex_cone().num_facets() == 4);
  CHECK(sgz2.vertex_cone().blocks() == std::vector<int>{2, 2});
  CHECK(sgz2.word_pattern == std::vector<int>{2, 1, 2, 1});
  CHECK(sgz2.lattice == AffineLattice::standard(4));

  auto sgz3 = build_family(FamilyKind::SGZ, 3);
  CHECK(sgz3.dim == 9);
  CHECK(sgz3.facets.size() == 18);
  CHECK(sgz3.vertex_cone().num_facets() == 9);
  CHECK(sgz3.vertex_cone().blocks() == std::vector<int>{3, 4, 2});
  CHECK(sgz3.word_pattern == std::vector<int>{3, 2, 1, 2, 3, 2, 1, 2, 1});

  auto ogz2 = build_family(FamilyKind::OGZ, 2);
  CHECK(ogz2.facets.size() == 8);
  CHECK_FALSE(ogz2.lattice == AffineLattice::standard(4));
  CHECK(det_of(ogz2.lattice.basis) == Rational(1, 4));

  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  CHECK(ddo2.dim == 4);
  CHECK(ddo2.facets.size() == 8);
  CHECK(ddo2.vertex_cone().num_facets() == 4);

  auto ddo3 = build_family(FamilyKind::DDO_C3, 3);
  CHECK(ddo3.dim == 9);
  CHECK(ddo3.facets.size() == 20);
  CHECK(ddo3.vertex_cone().num_facets() == 10);
  CHECK_FALSE(ddo3.has_cell_codec());
  CHECK_THROWS_AS(ddo3.distinguished_vertex_face(), NonMinimalFaceSet);

  auto str2 = build_family(FamilyKind::STRING_C, 2);
  CHECK(str2.vertex_cone().num_facets() == 4);
  CHECK(str2.facets.empty());
  CHECK_THROWS_AS(specialize(str2, vec({Rational(1), Rational(1)})), UnsupportedKind);

  CHECK_THROWS_AS(build_family(FamilyKind::DDO_C2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_family(FamilyKind::DDO_C3, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_family(FamilyKind::GZ_A, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_family(FamilyKind::OFFSET, 2), std::invalid_argument);
}

TEST_CASE("specializations match brute-force vertex enumeration") {
  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  auto sp = specialize(gz3, vec({Rational(3), Rational(0), Rational(-3)}));
  CHECK_FALSE(sp.degenerate);
  CHECK(point_set(sp.poly.vertices()) ==
        point_set(oracles::brute_force_vertices(3, sp.poly.facets())));
  // Distinguished vertex (l2, l3, l3) in coordinates (z11, z12, z21).
  CHECK(sp.distinguished_vertex == vec({Rational(0), Rational(-3), Rational(-3)}));
  CHECK(sp.poly.contains(sp.distinguished_vertex));

  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  auto sp2 = specialize(sgz2, vec({Rational(2), Rational(1)}));
  CHECK(point_set(sp2.poly.vertices()) ==
        point_set(oracles::brute_force_vertices(4, sp2.poly.facets())));
  // Distinguished vertex (x11, x12, y11, x21) = (l1, l2, l2, l2).
  CHECK(sp2.distinguished_vertex ==
        vec({Rational(2), Rational(1), Rational(1), Rational(1)}));
  // The distinguished vertex is simple here: exactly dim facets are tight.
  int tight = 0;
  for (const auto& f : sp2.poly.facets())
    if (f.normal.transpose().dot(sp2.distinguished_vertex) == f.offset) ++tight;
  CHECK(tight == 4);

  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  auto sp3 = specialize(ddo2, vec({Rational(1), Rational(1)}));
  CHECK(point_set(sp3.poly.vertices()) ==
        point_set(oracles::brute_force_vertices(4, sp3.poly.facets())));
  CHECK(sp3.distinguished_vertex == Vec::Zero(4));
}

TEST_CASE("degenerate parameters are flagged") {
  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  CHECK(gz3.strictly_valid(vec({Rational(3), Rational(0), Rational(-3)})));
  CHECK_FALSE(gz3.strictly_valid(vec({Rational(3), Rational(3), Rational(0)})));
  CHECK(specialize(gz3, vec({Rational(3), Rational(3), Rational(0)})).degenerate);

  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  CHECK(sgz2.strictly_valid(vec({Rational(2), Rational(1)})));
  CHECK_FALSE(sgz2.strictly_valid(vec({Rational(2), Rational(0)})));
  CHECK_FALSE(sgz2.strictly_valid(vec({Rational(1), Rational(1)})));
}

TEST_CASE("parameter grids are strictly valid and graded") {
  for (auto kind : {FamilyKind::GZ_A, FamilyKind::SGZ, FamilyKind::OGZ}) {
    auto fam = build_family(kind, kind == FamilyKind::GZ_A ? 3 : 2);
    auto grid = fam.parameter_grid(12);
    CHECK(grid.size() == 12);
    for (const auto& p : grid) CHECK(fam.strictly_valid(p));
    // Determinism and offset consistency.
    auto again = fam.parameter_grid(12);
    for (size_t i = 0; i < grid.size(); ++i) CHECK(grid[i] == again[i]);
    auto tail = fam.parameter_grid(6, 6);
    for (size_t i = 0; i < tail.size(); ++i) CHECK(tail[i] == grid[i + 6]);
    std::set<std::vector<Rational>> distinct;
    for (const auto& p : grid) distinct.insert(from_vec(p));
    CHECK(distinct.size() == grid.size());
  }
  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  for (const auto& p : ddo2.parameter_grid(8)) CHECK(ddo2.strictly_valid(p));
  CHECK(ddo2.reference_params() == vec({Rational(1), Rational(1)}));
}

TEST_CASE("cell codec round trips") {
  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  CHECK(gz3.cone_cells ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  // Every subset of cone facets survives a cells round trip.
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> set;
    for (int f = 0; f < 3; ++f)
      if (mask >> f & 1) set.push_back(f);
    auto face = make_cone_face(gz3.vertex_cone(), set);
    auto cells = face_cells(gz3, face);
    auto back = face_from_cells(gz3, cells);
    CHECK(back.set == face.set);
  }
  CHECK_THROWS_AS(face_from_cells(gz3, {{1, 1}}), InvalidCell);
  CHECK_THROWS_AS(face_from_cells(gz3, {{2, 1}}), InvalidCell);

  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  CHECK(ddo2.cone_cells ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {1, 2}, {2, 2}});
  CHECK_THROWS_AS(face_from_cells(ddo2, {{1, 1}}), InvalidCell);

  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  CHECK(sgz2.cone_cells ==
        std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}, {3, 2}});
}

TEST_CASE("cell rendering") {
  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  auto vertex = ddo2.distinguished_vertex_face();
  CHECK(render_cells_text(ddo2, face_cells(ddo2, vertex)) == "  +\n+ +\n  +\n");
  CHECK(render_cells_text(ddo2, {}) == "  .\n. .\n  .\n");

  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  CHECK(render_cells_text(gz3, face_cells(gz3, gz3.distinguished_vertex_face())) ==
        "  + +\n    +\n     \n");
}

TEST_CASE("operator translations") {
  auto gz3 = build_family(FamilyKind::GZ_A, 3);
  CHECK(gz3.ops_for_word({1, 2}) == std::vector<int>{2, 1});
  CHECK(gz3.ops_to_blocks({1, 2}) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(gz3.ops_for_word({3}), std::invalid_argument);
  CHECK_THROWS_AS(gz3.ops_to_blocks({3}), std::invalid_argument);

  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  CHECK(sgz2.ops_for_word({1, 2}) == std::vector<int>{2, 1});
  CHECK(sgz2.ops_to_blocks({1, 2}) == std::vector<int>{2, 1});

  auto ddo2 = build_family(FamilyKind::DDO_C2, 2);
  CHECK(ddo2.ops_for_word({2, 1, 2}) == std::vector<int>{2, 1, 2});
  CHECK(ddo2.ops_to_blocks({2, 1, 2}) == std::vector<int>{2, 1, 2});
}

TEST_CASE("realized cone faces are faces at strictly dominant parameters") {
  auto sgz2 = build_family(FamilyKind::SGZ, 2);
  auto sp = specialize(sgz2, vec({Rational(2), Rational(1)}));
  auto vertex_face = sgz2.distinguished_vertex_face();
  auto active = sgz2.realize_active_set(vertex_face);
  CHECK(active.size() == 4);
  auto handle = face_from_active_set(sp.poly, active);
  CHECK(handle.dim == 0);

  // Realization of the whole cone is the whole polytope.
  ConeFace whole{{}, sgz2.vertex_cone().dim()};
  CHECK(sgz2.realize_active_set(whole).empty());
}

TEST_CASE("trapezoid offset family") {
  auto trap = make_trapezoid_family();
  CHECK(trap.nparams == 4);
  CHECK(trap.dim == 2);
  CHECK(trap.fixed_grid.size() == 36);
  auto sp = specialize(trap, trap.reference_params());
  CHECK_FALSE(sp.degenerate);
  CHECK(lattice_volume(sp.poly, trap.lattice) == Rational(3, 2));
  CHECK_THROWS_AS(trap.vertex_cone(), NoConeStructure);
  CHECK_THROWS_AS(trap.root_system(), UnsupportedKind);
}
