#pragma once

#include "mitosiskit/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mitosiskit {

// One homogeneous inequality of a block cone, written as
//   x^{src_i}_{src_j} <= coeff * x^{dst_i}_{dst_j},
// with src_i = src_j = 0 encoding 0 <= coeff * x^{dst_i}_{dst_j}.
struct FacetTag {
  int src_i = 0, src_j = 0;
  int dst_i = 0, dst_j = 0;
  Rational coeff = 1;

  bool operator==(const FacetTag& o) const {
    return src_i == o.src_i && src_j == o.src_j && dst_i == o.dst_i && dst_j == o.dst_j &&
           coeff == o.coeff;
  }
  std::string to_string() const;
};

// Pointed polyhedral cone in R^d with coordinates x^i_j grouped into blocks
// (block i has positions 1..blocks[i-1]), cut out by FacetTag inequalities.
// Construction validates pointedness and the ray condition: no extreme ray is
// parallel to a coordinate axis x^i_j with j != 1.
class BlockCone {
 public:
  BlockCone(std::vector<int> blocks, std::vector<FacetTag> tags);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_size(int i) const;                 // 1-based block index
  int dim() const { return dim_; }
  int num_facets() const { return static_cast<int>(tags_.size()); }
  const std::vector<FacetTag>& tags() const { return tags_; }
  const std::vector<int>& blocks() const { return blocks_; }

  int coord(int i, int j) const;               // 0-based flat coordinate index
  Vec facet_normal(int f) const;               // normal . x <= 0
  Mat normal_matrix() const;
  const std::vector<Vec>& extreme_rays() const { return rays_; }

 private:
  std::vector<int> blocks_;
  std::vector<FacetTag> tags_;
  std::vector<int> block_offset_;
  int dim_;
  std::vector<Vec> rays_;
};

// Face of a block cone, carried as a chosen minimal defining facet subset
// (sorted indices into the cone's facet list).
struct ConeFace {
  std::vector<int> set;
  int dim = -1;

  bool operator==(const ConeFace& o) const { return set == o.set; }
  bool operator<(const ConeFace& o) const { return set < o.set; }
};

// Validates that `set` is a minimal defining subset: removing any element must
// grow the face. |set| equals the codimension for simplicial vertex cones but
// can be smaller on non-simplicial ones. Throws NonMinimalFaceSet.
ConeFace make_cone_face(const BlockCone& c, std::vector<int> set);

// Indices of extreme rays lying on every facet of the set.
std::vector<int> rays_on_face(const BlockCone& c, const std::vector<int>& set);

// All minimal defining subsets for the face cut out by `set` (useful for
// non-simplicial cones where the choice is not unique), sorted.
std::vector<std::vector<int>> minimal_defining_subsets(const BlockCone& c,
                                                       const std::vector<int>& set);

// One mitosis step in block i. Returns the (possibly empty) list of offspring
// faces of dimension dim(face)+1. Notes about exact tie-breaks are appended
// to `log` when provided. Throws NonMinimalFaceSet on duplicate targets in
// the face set and AmbiguousTieBreak when upper bounds are incomparable.
std::vector<ConeFace> mitosis_step(const BlockCone& c, const ConeFace& face, int block_i,
                                   std::vector<std::string>* log = nullptr);

// Applies a written operator sequence ops = (o_1, ..., o_k), rightmost
// operation first, starting from `start`; unions results and merges
// duplicates. Ops are cone block indices.
std::vector<ConeFace> mitosis_apply(const BlockCone& c, const ConeFace& start,
                                    const std::vector<int>& ops,
                                    std::vector<std::string>* log = nullptr);

}  // namespace mitosiskit
