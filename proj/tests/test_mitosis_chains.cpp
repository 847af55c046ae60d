#include "doctest.h"

#include "mitosiskit/blockcone.hpp"
#include "mitosiskit/families.hpp"
#include "mitosiskit/schubert.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

#include <set>
#include <vector>

using namespace mitosiskit;
using testutil::CellSet;
using testutil::cell_sets_of;
using testutil::cells_of;

namespace {

// Applies an operator prefix from the distinguished vertex and returns the
// resulting cell sets.
std::set<CellSet> stage(const PolytopeFamily& fam, const std::vector<int>& ops) {
  auto faces = mitosis_apply(fam.vertex_cone(), fam.distinguished_vertex_face(), ops);
  return cell_sets_of(fam, faces);
}

bool is_whole_cone(const PolytopeFamily& fam, const std::vector<int>& ops) {
  auto faces = mitosis_apply(fam.vertex_cone(), fam.distinguished_vertex_face(), ops);
  return faces.size() == 1 && faces[0].set.empty() &&
         faces[0].dim == fam.vertex_cone().dim();
}

std::set<CellSet> word_cells(const PolytopeFamily& fam, const std::vector<int>& word) {
  return cell_sets_of(fam, schubert_face_set_for_word(fam, word).faces);
}

}  // namespace

TEST_CASE("staged operator chains on the gz-a(3) vertex cone") {
  auto fam = build_family(FamilyKind::GZ_A, 3);

  // First chain: block 1, then 2, then 1.
  CHECK(stage(fam, {1}) == std::set<CellSet>{{{1, 3}, {2, 3}}});
  CHECK(stage(fam, {2, 1}) == std::set<CellSet>{{{1, 3}}});
  CHECK(is_whole_cone(fam, {1, 2, 1}));

  // Second chain: block 2, then 1, then 2; the middle step splits.
  CHECK(stage(fam, {2}) == std::set<CellSet>{{{1, 2}, {1, 3}}});
  CHECK(stage(fam, {1, 2}) == std::set<CellSet>{{{1, 2}}, {{2, 3}}});
  CHECK(is_whole_cone(fam, {2, 1, 2}));

  // The same stages through the word translation layer.
  CHECK(word_cells(fam, {2}) == stage(fam, {1}));
  CHECK(word_cells(fam, {1, 2}) == stage(fam, {2, 1}));
  CHECK(word_cells(fam, {1}) == stage(fam, {2}));
  CHECK(word_cells(fam, {2, 1}) == stage(fam, {1, 2}));
  CHECK(word_cells(fam, {2, 1, 2}) == stage(fam, {1, 2, 1}));
  CHECK(word_cells(fam, {1, 2, 1}) == stage(fam, {2, 1, 2}));
}

TEST_CASE("staged operator chains on the ddo-c2 vertex cone") {
  auto fam = build_family(FamilyKind::DDO_C2, 2);

  // First chain: 1, 2, 1, 2 applied in that order.
  CHECK(stage(fam, {1}) == std::set<CellSet>{{{1, 2}, {2, 2}, {3, 2}}});
  CHECK(stage(fam, {2, 1}) == std::set<CellSet>{{{1, 2}, {2, 2}}});
  CHECK(stage(fam, {1, 2, 1}) == std::set<CellSet>{{{1, 2}}});
  CHECK(is_whole_cone(fam, {2, 1, 2, 1}));

  // Second chain: 2, 1, 2, 1; steps two and three split.
  CHECK(stage(fam, {2}) == std::set<CellSet>{{{2, 1}, {1, 2}, {2, 2}}});
  CHECK(stage(fam, {1, 2}) ==
        std::set<CellSet>{{{1, 2}, {3, 2}}, {{2, 1}, {1, 2}}});
  CHECK(stage(fam, {2, 1, 2}) == std::set<CellSet>{{{2, 2}}, {{3, 2}}, {{2, 1}}});
  CHECK(is_whole_cone(fam, {1, 2, 1, 2}));

  // Word translation is the identity here.
  CHECK(word_cells(fam, {1}) == stage(fam, {1}));
  CHECK(word_cells(fam, {2, 1}) == stage(fam, {2, 1}));
  CHECK(word_cells(fam, {1, 2, 1}) == stage(fam, {1, 2, 1}));
  CHECK(word_cells(fam, {2, 1, 2}) == stage(fam, {2, 1, 2}));
}

TEST_CASE("staged operator chains on the sgz(2) degree cone") {
  auto fam = build_family(FamilyKind::SGZ, 2);

  CHECK(stage(fam, {1}) == std::set<CellSet>{{{1, 2}, {2, 2}, {3, 2}}});
  CHECK(stage(fam, {2, 1}) == std::set<CellSet>{{{1, 2}, {2, 2}}});
  CHECK(stage(fam, {1, 2, 1}) == std::set<CellSet>{{{1, 2}}});
  CHECK(is_whole_cone(fam, {2, 1, 2, 1}));

  // Single letters: the two length-one face sets are the two edges of the
  // polytope at the distinguished vertex.
  CHECK(word_cells(fam, {1}) == std::set<CellSet>{{{1, 2}, {2, 2}, {3, 2}}});
  CHECK(word_cells(fam, {2}) == std::set<CellSet>{{{2, 1}, {1, 2}, {2, 2}}});
  CHECK(word_cells(fam, {1, 2}) == stage(fam, {2, 1}));
  CHECK(word_cells(fam, {1, 2, 1, 2}) == stage(fam, {2, 1, 2, 1}));
}

TEST_CASE("block rule matches the pipe-dream rule on every gz-a face, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    auto fam = build_family(FamilyKind::GZ_A, n);
    const BlockCone& cone = fam.vertex_cone();
    const int d = cone.num_facets();
    REQUIRE(d == n * (n - 1) / 2);

    auto reflect = [n](const CellSet& cells) {
      oracles::PipeDream out;
      for (auto [r, c] : cells) out.insert({r, n + 1 - c});
      return out;
    };

    // The vertex corresponds to the full staircase diagram.
    {
      auto vertex_cells = cells_of(fam, fam.distinguished_vertex_face());
      oracles::PipeDream staircase;
      for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n - i; ++j) staircase.insert({i, j});
      CHECK(reflect(vertex_cells) == staircase);
    }

    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<int> set;
      for (int f = 0; f < d; ++f)
        if (mask >> f & 1) set.push_back(f);
      auto face = make_cone_face(cone, set);
      auto diagram = reflect(cells_of(fam, face));
      for (int b = 1; b <= n - 1; ++b) {
        auto children = mitosis_step(cone, face, b);
        std::set<oracles::PipeDream> engine;
        for (const auto& ch : children) engine.insert(reflect(cells_of(fam, ch)));
        CAPTURE(mask);
        CAPTURE(b);
        CHECK(engine == oracles::pipe_dream_mitosis(diagram, b));
      }
    }
  }
}
