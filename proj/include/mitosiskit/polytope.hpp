#pragma once

#include "mitosiskit/errors.hpp"
#include "mitosiskit/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace mitosiskit {

// Full-rank lattice in Q^d given by an invertible basis matrix (columns are
// generators). Induced volumes are normalized so a fundamental cell has
// volume 1.
struct AffineLattice {
  Mat basis;
  Mat inv;

  static AffineLattice standard(Eigen::Index d);
  static AffineLattice from_basis(Mat b);

  Eigen::Index dim() const { return basis.rows(); }
  bool contains(const Vec& x) const;
  Vec to_lattice(const Vec& x) const { return inv * x; }
  bool operator==(const AffineLattice& o) const;
};

// One inequality normal . x <= offset.
struct Facet {
  Vec normal;
  Rational offset;
};

struct VertexData {
  Vec point;
  std::vector<int> active;  // sorted indices of all facets tight at the point
};

// Face of a polytope, identified by facet index sets. `active` is the
// requested set, `saturated` the full set of facets tight on the face.
// Invariant: dim + rank(normals over saturated) = ambient dimension.
struct FaceHandle {
  std::vector<int> active;
  std::vector<int> saturated;
  int dim = -1;
};

// Enumerates vertices of { x : normal_f . x <= offset_f } by exhaustive
// rank-d subset search. Throws UnboundedPolytope when the recession cone
// { y : normal_f . y <= 0 } is nontrivial, EmptyPolytope when infeasible.
std::vector<VertexData> enumerate_vertices(Eigen::Index dim, const std::vector<Facet>& facets);

// Extreme rays of the cone { x : N x <= 0 } (rows of n are the normals).
// Requires a pointed cone (rank d); rays are returned as primitive integer
// direction vectors, deduplicated. With early_exit, returns after the first.
std::vector<Vec> extreme_rays_of_cone(const Mat& n, bool early_exit = false);

// Combinatorial and metric face data shared by every member of a family with
// a fixed normal fan. Faces are keyed by saturated facet sets and built on
// demand: vertex membership, dimension, an integer basis of the direction
// space inside the given lattice, a vertex-fan triangulation (stored as
// vertex index tuples), and reference orientation signs for each simplex.
class FaceSkeleton {
 public:
  struct Face {
    std::vector<int> sat;
    std::vector<int> verts;
    int dim = -1;
    Mat dir_basis;  // lattice coordinates, integer entries, dim columns
    Mat pinv;       // maps lattice-coordinate directions to local coordinates
    std::vector<std::vector<int>> children;          // saturated keys of codim-1 subfaces
    std::vector<IVec> child_normals;                 // primitive inner-normal data per child
    std::vector<std::vector<int>> simplices;         // tuples of dim+1 vertex indices
    std::vector<int> simplex_signs;                  // det sign at reference coords
  };

  FaceSkeleton(Mat normals, AffineLattice lattice, std::vector<VertexData> reference_vertices);

  const Face& face(const std::vector<int>& active);
  std::vector<int> saturate(const std::vector<int>& active) const;  // throws EmptyFace

  Eigen::Index ambient_dim() const { return normals_.cols(); }
  const std::vector<VertexData>& reference_vertices() const { return verts_; }
  const AffineLattice& lattice() const { return lattice_; }

 private:
  const Face& face_unlocked(const std::vector<int>& sat);
  void build_face(Face& f);

  Mat normals_;
  AffineLattice lattice_;
  std::vector<VertexData> verts_;
  std::vector<Vec> ref_lat_;  // lattice coordinates of reference vertices
  std::map<std::vector<int>, Face> faces_;
  std::mutex mu_;
};

// Per-instance volume evaluator over a shared skeleton. `vertex_coords` must
// be aligned with the skeleton's vertex indexing. Throws ModelInvalidated
// when an orientation sign flips (combinatorics changed).
struct ModelInvalidated : std::runtime_error {
  explicit ModelInvalidated(const std::string& what) : std::runtime_error(what) {}
};

class InstanceVolumes {
 public:
  InstanceVolumes(std::shared_ptr<FaceSkeleton> skel, const std::vector<Vec>& vertex_coords);

  Rational volume(const std::vector<int>& active);
  Rational volume_boundary_cone(const std::vector<int>& active);
  const std::shared_ptr<FaceSkeleton>& skeleton() const { return skel_; }

 private:
  Rational volume_bc_rec(const std::vector<int>& sat);

  std::shared_ptr<FaceSkeleton> skel_;
  std::vector<Vec> lat_;  // lattice coordinates per vertex
  std::map<std::vector<int>, Rational> memo_bc_;
};

class HPolytope {
 public:
  HPolytope(Eigen::Index dim, std::vector<Facet> facets);

  Eigen::Index dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  Mat normal_matrix() const;
  bool contains(const Vec& x) const;

  // Vertex data and skeleton are built lazily on first use (not thread safe).
  const std::vector<VertexData>& vertices() const;
  std::shared_ptr<FaceSkeleton> skeleton(const AffineLattice& lattice) const;
  InstanceVolumes& volumes(const AffineLattice& lattice) const;

 private:
  Eigen::Index dim_;
  std::vector<Facet> facets_;
  mutable std::vector<VertexData> verts_;
  mutable bool verts_built_ = false;
  struct LatticeSlot {
    AffineLattice lattice;
    std::shared_ptr<FaceSkeleton> skel;
    std::shared_ptr<InstanceVolumes> vols;
  };
  mutable std::vector<LatticeSlot> slots_;
};

FaceHandle face_from_active_set(const HPolytope& p, std::vector<int> active);
FaceHandle whole_polytope_face(const HPolytope& p);

// Face given by the union of active sets plus a transversality flag
// (codimensions add). Throws EmptyFace when the intersection is empty.
FaceHandle intersect_faces(const HPolytope& p, const FaceHandle& f, const FaceHandle& g,
                           bool* transverse);

// Euclidean-normalized volume with respect to the lattice induced on the
// face's affine span. Vertices (dim 0) have volume 1.
Rational lattice_volume(const HPolytope& p, const AffineLattice& lattice, const FaceHandle& f);
Rational lattice_volume(const HPolytope& p, const AffineLattice& lattice);

// Independent volume route: recursive boundary-cone formula
// vol_k(F) = (1/k) sum_G |<n_G, centroid> - o_G| vol_{k-1}(G).
Rational lattice_volume_boundary_cone(const HPolytope& p, const AffineLattice& lattice,
                                      const FaceHandle& f);

}  // namespace mitosiskit
