#pragma once

#include "mitosiskit/families.hpp"
#include "mitosiskit/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace mitosiskit {

// Shares one combinatorial skeleton across all strictly valid parameter
// values of a family. Vertex coordinates depend linearly on the parameters;
// the linear maps are computed once at the reference point, and every other
// instance is validated against the reference tightness pattern before the
// shared skeleton is trusted. On a pattern mismatch (or a degenerate member)
// the instance falls back to a fresh vertex enumeration.
class FamilyModel {
 public:
  explicit FamilyModel(PolytopeFamily fam);

  const PolytopeFamily& family() const { return fam_; }
  const HPolytope& reference_polytope() const { return ref_.poly; }

  // Lattice volume at a parameter point of the face cut out by the given
  // family facet indices (volume 0 when the face is empty there).
  Rational face_volume(const std::vector<int>& active, const Vec& params);
  Rational polytope_volume(const Vec& params);

  // Exact homogeneous polynomial in the family parameters giving face_volume.
  // Interpolated over the family grid, with extra points verified exactly;
  // the grid is enlarged at most three times before giving up.
  MultiPoly face_volume_polynomial(const std::vector<int>& active);
  MultiPoly volume_polynomial();

 private:
  struct Instance {
    bool shared = false;
    std::shared_ptr<InstanceVolumes> vols;  // shared-skeleton route
    std::shared_ptr<HPolytope> fresh;       // fallback route
  };
  Instance& instance_for(const Vec& params);

  PolytopeFamily fam_;
  Specialization ref_;
  std::shared_ptr<FaceSkeleton> skel_;
  std::vector<Mat> vertex_maps_;  // per reference vertex: params -> coordinates
  std::map<std::vector<Rational>, Instance> instances_;
  std::map<std::vector<int>, MultiPoly> poly_memo_;
  std::mutex mu_;
};

// Face set attached to a Weyl group element by the operator calculus: pick
// the lexicographically first reduced subword of the family's word pattern,
// translate it to the written operator sequence, and run mitosis from the
// distinguished vertex.
struct SchubertFaceSet {
  SignedPerm w;
  std::vector<int> word;                    // chosen reduced subword, user labels
  std::vector<std::vector<int>> all_words;  // every admissible subword, lex sorted
  std::vector<int> ops;                     // written operator sequence (cone blocks)
  std::vector<ConeFace> faces;
  std::vector<std::string> notes;           // exact tie-break notes from mitosis
};

SchubertFaceSet schubert_face_set(const PolytopeFamily& fam, const SignedPerm& w);
SchubertFaceSet schubert_face_set_for_word(const PolytopeFamily& fam,
                                           const std::vector<int>& word);

// One row per parameter point: l(w)! times the summed face volumes against
// the flag-variety degree at the mapped weight.
struct DegreeCheckRow {
  Vec params;
  Vec weight;
  Rational face_volume_sum;
  Rational scaled_sum;
  Rational degree;
  bool match = false;
};

struct DegreeCheckReport {
  SchubertFaceSet faces;
  int ell = 0;
  std::vector<DegreeCheckRow> rows;
  MultiPoly volume_side;  // l(w)! * sum of face volume polynomials
  MultiPoly degree_side;  // degree interpolated as a polynomial in the parameters
  bool polynomials_match = false;
  bool all_rows_match = false;
};

DegreeCheckReport degree_check(FamilyModel& model, const SignedPerm& w, int grid_rows = 5);
DegreeCheckReport degree_check_for_word(FamilyModel& model, const std::vector<int>& word,
                                        int grid_rows = 5);

// Expands the product of two Schubert classes in the Schubert basis by
// intersecting face sets on the reference member and matching volume
// polynomials. Pairwise intersections must be transverse
// (TransversalityFailure) and the basis polynomials independent
// (DependentBasis).
struct StructureConstantsReport {
  SignedPerm u, v;
  int target_length = 0;  // l(u) + l(v) - dim; negative means the zero class
  bool zero_by_grading = false;
  std::vector<std::pair<SignedPerm, Rational>> constants;
  std::vector<std::vector<int>> intersection_faces;  // saturated family facet sets
  std::vector<std::string> notes;
};

StructureConstantsReport structure_constants(FamilyModel& model, const SignedPerm& u,
                                             const SignedPerm& v);

// Ranks of the spaces spanned by all order-k partial derivatives of the
// volume polynomial, k = 0..deg.
std::vector<int> graded_ring_ranks(FamilyModel& model);

// Polynomial differential operator in the family parameters.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(MultiPoly symbol) : sym_(std::move(symbol)) {}
  static DiffOperator partial(int nparams, int index);

  DiffOperator operator*(const DiffOperator& o) const;  // composition
  DiffOperator operator+(const DiffOperator& o) const;
  DiffOperator operator-(const DiffOperator& o) const;

  MultiPoly apply(const MultiPoly& p) const;
  const MultiPoly& symbol() const { return sym_; }

 private:
  MultiPoly sym_;
};

// Derivative operator with respect to one facet offset. Requires a family
// whose parameters are exactly the facet offsets and whose members are simple
// at the reference and at a second sample point; throws NotSimple otherwise.
DiffOperator facet_derivative(FamilyModel& model, int facet_index);

// Degree check of every Weyl group element over the symplectic family.
struct ConjectureEntry {
  SignedPerm w;
  int ell = 0;
  std::vector<int> word;
  std::vector<std::vector<std::pair<int, int>>> cells;  // one diagram per face
  bool all_rows_match = false;
  bool polynomials_match = false;
};

struct ConjectureReport {
  int n = 0;
  bool verified = false;
  std::vector<ConjectureEntry> entries;
};

ConjectureReport conjecture_report(int n, int grid_rows = 5);

}  // namespace mitosiskit
