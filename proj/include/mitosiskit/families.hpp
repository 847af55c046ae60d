#pragma once

#include "mitosiskit/blockcone.hpp"
#include "mitosiskit/polytope.hpp"
#include "mitosiskit/weyl.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mitosiskit {

enum class FamilyKind { GZ_A, SGZ, OGZ, DDO_C2, DDO_C3, STRING_C, OFFSET };

std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& name);

// One facet of a linear family: normal . x <= offset_coeffs . params.
struct FamilyFacet {
  Vec normal;
  Vec offset_coeffs;
  std::string name;
};

struct Specialization {
  HPolytope poly;
  Vec params;
  Vec distinguished_vertex;
  bool degenerate = false;  // parameters on the boundary of the strict chamber
};

// A linear family of polytopes P(params) in R^dim, together with the
// structures used by Schubert-calculus checks: the ambient lattice, a block
// cone with tagged facets at the distinguished vertex, a cell labeling of
// cone facets (when a pipe-dream style codec exists), the Weyl group with the
// family's labeling of simple reflections, the params -> weight map, and the
// word pattern whose reduced subwords drive mitosis.
class PolytopeFamily {
 public:
  FamilyKind kind;
  int n = 0;        // family size parameter
  int dim = 0;      // ambient dimension
  int nparams = 0;  // number of family parameters
  std::string display_name;
  std::vector<FamilyFacet> facets;
  AffineLattice lattice;

  std::optional<BlockCone> cone;
  std::vector<int> cone_to_family;                  // cone facet -> family facet index
  std::vector<std::pair<int, int>> cone_cells;      // cone facet -> cell (empty: no codec)
  int cell_rows = 0, cell_cols = 0;                 // cell table extents
  std::optional<RootSystem> weyl;
  Mat weight_map;                                   // params -> weight in R^ambient
  Mat vertex_map;                                   // params -> distinguished vertex
  std::vector<int> word_pattern;                    // user labels
  std::vector<std::string> param_names;

  const BlockCone& vertex_cone() const;             // throws NoConeStructure
  const RootSystem& root_system() const;            // throws UnsupportedKind

  bool cell_fillable(int r, int c) const;
  bool has_cell_codec() const;

  // Written operator sequence (cone block indices, rightmost applied first)
  // realizing the face set of the element with this reduced word (user labels).
  std::vector<int> ops_for_word(const std::vector<int>& word) const;

  // Translates written operator subscripts of this family's calculus into
  // cone block indices (identity except for the symplectic conventions).
  std::vector<int> ops_to_blocks(const std::vector<int>& ops) const;

  // Start face of mitosis: the distinguished vertex of the cone. Requires a
  // simplicial cone (unique minimal subset); throws NonMinimalFaceSet otherwise.
  ConeFace distinguished_vertex_face() const;

  // Family facet indices tight on the realization of a cone face.
  std::vector<int> realize_active_set(const ConeFace& f) const;

  bool strictly_valid(const Vec& params) const;
  Vec reference_params() const;
  // Strictly valid integer parameter points, graded-lex by gap tuples; the
  // coordinate gaps range over {1..dim+2} (with an extra anchor coordinate
  // for type A families).
  std::vector<Vec> parameter_grid(int count, int offset = 0) const;

  // Explicit grid override and reference point (offset-parameterized families).
  std::vector<Vec> fixed_grid;
  Vec fixed_reference;
};

PolytopeFamily build_family(FamilyKind kind, int n);

// Ad-hoc family whose parameters are the facet offsets themselves.
PolytopeFamily make_offset_family(std::string name, const std::vector<Vec>& normals,
                                  const Vec& reference_offsets, std::vector<Vec> grid);

PolytopeFamily make_trapezoid_family();

Specialization specialize(const PolytopeFamily& fam, const Vec& params);

// Cell codec for pipe-dream style rendering.
std::vector<std::pair<int, int>> face_cells(const PolytopeFamily& fam, const ConeFace& f);
ConeFace face_from_cells(const PolytopeFamily& fam,
                         const std::vector<std::pair<int, int>>& cells);
std::string render_cells_text(const PolytopeFamily& fam,
                              const std::vector<std::pair<int, int>>& cells);

}  // namespace mitosiskit
