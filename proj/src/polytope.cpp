#include "mitosiskit/polytope.hpp"

#include <algorithm>
#include <set>

namespace mitosiskit {

AffineLattice AffineLattice::standard(Eigen::Index d) {
  AffineLattice l;
  l.basis = identity_mat(d);
  l.inv = identity_mat(d);
  return l;
}

AffineLattice AffineLattice::from_basis(Mat b) {
  if (b.rows() != b.cols()) throw LatticeMismatch("lattice basis must be square");
  Eigen::FullPivLU<Mat> lu(b);
  if (lu.rank() != b.rows()) throw LatticeMismatch("lattice basis must be invertible");
  AffineLattice l;
  l.basis = std::move(b);
  l.inv = lu.inverse();
  return l;
}

bool AffineLattice::contains(const Vec& x) const {
  using boost::multiprecision::denominator;
  const Vec y = inv * x;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (denominator(y(i)) != 1) return false;
  }
  return true;
}

bool AffineLattice::operator==(const AffineLattice& o) const {
  if (basis.rows() != o.basis.rows() || basis.cols() != o.basis.cols()) return false;
  return basis == o.basis;
}

namespace {

// Incremental row echelon over the rationals with exact arithmetic. Rows are
// normalized to pivot 1 and reduced against all previously inserted rows, so
// a depth-d state back-substitutes in reverse insertion order.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<Rational> rhs;
  std::vector<Eigen::Index> pivots;

  bool push(Vec row, Rational r) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational c = row(pivots[k]);
      if (c != 0) {
        row -= c * rows[k];
        r -= c * rhs[k];
      }
    }
    Eigen::Index p = -1;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      if (row(j) != 0) {
        p = j;
        break;
      }
    }
    if (p < 0) return false;
    const Rational c = row(p);
    row /= c;
    r /= c;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }

  void pop() {
    rows.pop_back();
    rhs.pop_back();
    pivots.pop_back();
  }

  Vec solve_point(Eigen::Index d) const {
    Vec x = Vec::Zero(d);
    for (std::size_t k = rows.size(); k-- > 0;) {
      Rational v = rhs[k];
      for (std::size_t j = k + 1; j < rows.size(); ++j) v -= rows[k](pivots[j]) * x(pivots[j]);
      x(pivots[k]) = v;
    }
    return x;
  }

  Vec kernel_dir(Eigen::Index d) const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (const auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Eigen::Index c = -1;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (!is_pivot[static_cast<std::size_t>(j)]) {
        c = j;
        break;
      }
    }
    Vec x = Vec::Zero(d);
    x(c) = 1;
    for (std::size_t k = rows.size(); k-- > 0;) {
      Rational v = -rows[k](c);
      for (std::size_t j = k + 1; j < rows.size(); ++j) v -= rows[k](pivots[j]) * x(pivots[j]);
      x(pivots[k]) = v;
    }
    return x;
  }
};

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Vec> extreme_rays_of_cone(const Mat& n, bool early_exit) {
  const Eigen::Index d = n.cols();
  const Eigen::Index m = n.rows();
  std::vector<Vec> rays;
  if (d == 0) return rays;
  if (rank_of(n) < d) {
    // Lineality space: both directions of any kernel vector lie in the cone.
    Mat ker = kernel_of(n);
    rays.push_back(ker.col(0));
    return rays;
  }
  auto in_cone = [&](const Vec& y) {
    for (Eigen::Index r = 0; r < m; ++r) {
      if (n.row(r).transpose().dot(y) > 0) return false;
    }
    return true;
  };
  std::set<std::vector<Integer>> seen;
  Echelon st;
  bool done = false;
  auto consider = [&](const Vec& dir) {
    for (const Vec& cand : {dir, Vec(-dir)}) {
      if (!in_cone(cand)) continue;
      IVec prim = primitive_vector(cand);
      std::vector<Integer> key(static_cast<std::size_t>(prim.size()));
      for (Eigen::Index i = 0; i < prim.size(); ++i) key[static_cast<std::size_t>(i)] = prim(i);
      if (!seen.insert(key).second) continue;
      Vec out(prim.size());
      for (Eigen::Index i = 0; i < prim.size(); ++i) out(i) = Rational(prim(i));
      rays.push_back(out);
      if (early_exit) done = true;
    }
  };
  auto rec = [&](auto&& self, Eigen::Index i) -> void {
    if (done) return;
    if (static_cast<Eigen::Index>(st.rows.size()) == d - 1) {
      consider(st.kernel_dir(d));
      return;
    }
    if (i == m) return;
    if (static_cast<Eigen::Index>(st.rows.size()) + (m - i) < d - 1) return;
    if (st.push(n.row(i).transpose(), 0)) {
      self(self, i + 1);
      st.pop();
      if (done) return;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return rays;
}

std::vector<VertexData> enumerate_vertices(Eigen::Index dim, const std::vector<Facet>& facets) {
  const Eigen::Index m = static_cast<Eigen::Index>(facets.size());
  Mat n(m, dim);
  Vec b(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    n.row(r) = facets[static_cast<std::size_t>(r)].normal.transpose();
    b(r) = facets[static_cast<std::size_t>(r)].offset;
  }
  if (dim > 0) {
    if (rank_of(n) < dim) {
      throw UnboundedPolytope("recession cone has lineality (normal rank " +
                              std::to_string(rank_of(n)) + " < " + std::to_string(dim) + ")");
    }
    if (!extreme_rays_of_cone(n, true).empty()) {
      throw UnboundedPolytope("recession cone has an extreme ray");
    }
  }

  std::map<std::vector<Rational>, Vec> unique_pts;
  Echelon st;
  auto emit = [&]() {
    const Vec x = st.solve_point(dim);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (n.row(r).transpose().dot(x) > b(r)) return;
    }
    std::vector<Rational> key(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) key[static_cast<std::size_t>(i)] = x(i);
    unique_pts.emplace(std::move(key), x);
  };
  if (dim == 0) {
    std::vector<VertexData> out;
    out.push_back(VertexData{Vec(0), {}});
    for (Eigen::Index r = 0; r < m; ++r) {
      out[0].active.push_back(static_cast<int>(r));
      if (b(r) < 0) throw EmptyPolytope("infeasible 0-dimensional system");
    }
    return out;
  }
  auto rec = [&](auto&& self, Eigen::Index i) -> void {
    if (static_cast<Eigen::Index>(st.rows.size()) == dim) {
      emit();
      return;
    }
    if (i == m) return;
    if (static_cast<Eigen::Index>(st.rows.size()) + (m - i) < dim) return;
    if (st.push(n.row(i).transpose(), b(i))) {
      self(self, i + 1);
      st.pop();
    }
    self(self, i + 1);
  };
  rec(rec, 0);

  if (unique_pts.empty()) throw EmptyPolytope("no vertex satisfies all inequalities");

  std::vector<VertexData> out;
  out.reserve(unique_pts.size());
  for (const auto& [key, x] : unique_pts) {
    (void)key;
    VertexData v;
    v.point = x;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (n.row(r).transpose().dot(x) == b(r)) v.active.push_back(static_cast<int>(r));
    }
    out.push_back(std::move(v));
  }
  return out;
}

FaceSkeleton::FaceSkeleton(Mat normals, AffineLattice lattice, std::vector<VertexData> rv)
    : normals_(std::move(normals)), lattice_(std::move(lattice)), verts_(std::move(rv)) {
  if (lattice_.dim() != normals_.cols()) throw LatticeMismatch("lattice/polytope dimension");
  ref_lat_.reserve(verts_.size());
  for (const auto& v : verts_) ref_lat_.push_back(lattice_.inv * v.point);
}

std::vector<int> FaceSkeleton::saturate(const std::vector<int>& active) const {
  const std::vector<int> a = sorted_unique(active);
  std::vector<int> sat;
  bool first = true;
  for (const auto& v : verts_) {
    if (!std::includes(v.active.begin(), v.active.end(), a.begin(), a.end())) continue;
    if (first) {
      sat = v.active;
      first = false;
    } else {
      std::vector<int> tmp;
      std::set_intersection(sat.begin(), sat.end(), v.active.begin(), v.active.end(),
                            std::back_inserter(tmp));
      sat = std::move(tmp);
    }
  }
  if (first) throw EmptyFace("no vertex is tight on the requested facet set");
  return sat;
}

const FaceSkeleton::Face& FaceSkeleton::face(const std::vector<int>& active) {
  const std::vector<int> sat = saturate(active);
  std::lock_guard<std::mutex> lock(mu_);
  return face_unlocked(sat);
}

const FaceSkeleton::Face& FaceSkeleton::face_unlocked(const std::vector<int>& sat) {
  auto it = faces_.find(sat);
  if (it != faces_.end()) return it->second;
  Face f;
  f.sat = sat;
  build_face(f);
  return faces_.emplace(sat, std::move(f)).first->second;
}

void FaceSkeleton::build_face(Face& f) {
  const Eigen::Index d = ambient_dim();
  for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
    const auto& a = verts_[vi].active;
    if (std::includes(a.begin(), a.end(), f.sat.begin(), f.sat.end())) {
      f.verts.push_back(static_cast<int>(vi));
    }
  }
  if (f.verts.empty()) throw EmptyFace("face has no vertices");

  // Direction space = kernel of the saturated normal rows, in lattice coords.
  Mat nsat(static_cast<Eigen::Index>(f.sat.size()), d);
  for (std::size_t k = 0; k < f.sat.size(); ++k) nsat.row(static_cast<Eigen::Index>(k)) = normals_.row(f.sat[k]);
  Mat ker = (f.sat.empty()) ? identity_mat(d) : kernel_of(nsat);
  Mat span_lat = lattice_.inv * ker;
  f.dir_basis = saturated_lattice_basis(span_lat);
  f.dim = static_cast<int>(f.dir_basis.cols());
  if (f.dim > 0) {
    Mat gram = f.dir_basis.transpose() * f.dir_basis;
    f.pinv = Eigen::FullPivLU<Mat>(gram).inverse() * f.dir_basis.transpose();
  } else {
    f.pinv = Mat(0, d);
  }

  // Sanity: the vertex span must fill the direction space.
  {
    Mat diff(d, static_cast<Eigen::Index>(f.verts.size()));
    for (std::size_t k = 0; k < f.verts.size(); ++k) {
      diff.col(static_cast<Eigen::Index>(k)) =
          verts_[static_cast<std::size_t>(f.verts[k])].point -
          verts_[static_cast<std::size_t>(f.verts[0])].point;
    }
    if (rank_of(diff) != f.dim) {
      throw std::logic_error("face dimension mismatch between normals and vertex span");
    }
  }

  if (f.dim == 0) {
    if (f.verts.size() != 1) throw std::logic_error("0-face with multiple vertices");
    f.simplices.push_back({f.verts[0]});
    f.simplex_signs.push_back(1);
    return;
  }

  // Children: codim-1 subfaces, found by adjoining one more facet.
  std::set<std::vector<int>> child_keys;
  const Eigen::Index m = normals_.rows();
  for (Eigen::Index g = 0; g < m; ++g) {
    if (std::binary_search(f.sat.begin(), f.sat.end(), static_cast<int>(g))) continue;
    std::vector<int> sub;
    for (const int vi : f.verts) {
      const auto& a = verts_[static_cast<std::size_t>(vi)].active;
      if (std::binary_search(a.begin(), a.end(), static_cast<int>(g))) sub.push_back(vi);
    }
    if (sub.empty()) continue;
    std::vector<int> child_sat = verts_[static_cast<std::size_t>(sub[0])].active;
    for (std::size_t k = 1; k < sub.size(); ++k) {
      const auto& a = verts_[static_cast<std::size_t>(sub[k])].active;
      std::vector<int> tmp;
      std::set_intersection(child_sat.begin(), child_sat.end(), a.begin(), a.end(),
                            std::back_inserter(tmp));
      child_sat = std::move(tmp);
    }
    if (!child_keys.insert(child_sat).second) continue;
    const Face& child = face_unlocked(child_sat);
    if (child.dim != f.dim - 1) {
      child_keys.erase(child_sat);
      continue;
    }
    f.children.push_back(child_sat);
  }

  // Primitive inner normals of children in the face's local coordinates.
  for (const auto& ck : f.children) {
    const Face& child = face_unlocked(ck);
    if (f.dim == 1) {
      IVec n1(1);
      n1(0) = 1;
      f.child_normals.push_back(n1);
      continue;
    }
    Mat local_dirs = f.pinv * child.dir_basis;  // f.dim x (f.dim - 1)
    Mat ker1 = kernel_of(Mat(local_dirs.transpose()));
    if (ker1.cols() != 1) throw std::logic_error("child normal is not unique");
    f.child_normals.push_back(primitive_vector(ker1.col(0)));
  }

  // Vertex-fan triangulation from the lexicographically smallest vertex.
  int apex = f.verts[0];
  for (const int vi : f.verts) {
    const Vec& a = verts_[static_cast<std::size_t>(vi)].point;
    const Vec& b = verts_[static_cast<std::size_t>(apex)].point;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) {
        if (a(i) < b(i)) apex = vi;
        break;
      }
    }
  }
  for (const auto& ck : f.children) {
    const Face& child = face_unlocked(ck);
    if (std::binary_search(child.verts.begin(), child.verts.end(), apex)) continue;
    for (const auto& sigma : child.simplices) {
      std::vector<int> s = sigma;
      s.push_back(apex);
      f.simplices.push_back(std::move(s));
    }
  }
  if (f.simplices.empty()) throw std::logic_error("triangulation produced no simplices");

  // Orientation signs at the reference coordinates.
  for (const auto& sigma : f.simplices) {
    Mat mdet(f.dim, f.dim);
    const Vec base = f.pinv * ref_lat_[static_cast<std::size_t>(sigma[0])];
    for (int k = 1; k <= f.dim; ++k) {
      mdet.col(k - 1) = f.pinv * ref_lat_[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] - base;
    }
    const Rational det = det_of(mdet);
    if (det == 0) throw std::logic_error("degenerate simplex at reference coordinates");
    f.simplex_signs.push_back(det > 0 ? 1 : -1);
  }
}

InstanceVolumes::InstanceVolumes(std::shared_ptr<FaceSkeleton> skel,
                                 const std::vector<Vec>& vertex_coords)
    : skel_(std::move(skel)) {
  if (vertex_coords.size() != skel_->reference_vertices().size()) {
    throw std::invalid_argument("vertex count mismatch with skeleton");
  }
  lat_.reserve(vertex_coords.size());
  for (const auto& p : vertex_coords) lat_.push_back(skel_->lattice().inv * p);
}

Rational InstanceVolumes::volume(const std::vector<int>& active) {
  const FaceSkeleton::Face& f = skel_->face(active);
  if (f.dim == 0) return 1;
  Integer fact = 1;
  for (int k = 2; k <= f.dim; ++k) fact *= k;
  Rational total = 0;
  for (std::size_t s = 0; s < f.simplices.size(); ++s) {
    const auto& sigma = f.simplices[s];
    Mat mdet(f.dim, f.dim);
    const Vec base = f.pinv * lat_[static_cast<std::size_t>(sigma[0])];
    for (int k = 1; k <= f.dim; ++k) {
      mdet.col(k - 1) = f.pinv * lat_[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] - base;
    }
    Rational det = det_of(mdet);
    if (det == 0 || ((det > 0 ? 1 : -1) != f.simplex_signs[s])) {
      throw ModelInvalidated("simplex orientation changed against the reference");
    }
    if (det < 0) det = -det;
    total += det;
  }
  return total / Rational(fact);
}

Rational InstanceVolumes::volume_boundary_cone(const std::vector<int>& active) {
  return volume_bc_rec(skel_->face(active).sat);
}

Rational InstanceVolumes::volume_bc_rec(const std::vector<int>& sat) {
  auto it = memo_bc_.find(sat);
  if (it != memo_bc_.end()) return it->second;
  const FaceSkeleton::Face& f = skel_->face(sat);
  Rational result = 1;
  if (f.dim > 0) {
    Vec centroid = Vec::Zero(skel_->ambient_dim());
    for (const int vi : f.verts) centroid += lat_[static_cast<std::size_t>(vi)];
    centroid /= Rational(static_cast<int>(f.verts.size()));
    const Vec apex_local = f.pinv * centroid;
    Rational total = 0;
    for (std::size_t c = 0; c < f.children.size(); ++c) {
      const FaceSkeleton::Face& child = skel_->face(f.children[c]);
      const IVec& ni = f.child_normals[c];
      Vec nloc(ni.size());
      for (Eigen::Index i = 0; i < ni.size(); ++i) nloc(i) = Rational(ni(i));
      const Vec wit_local = f.pinv * lat_[static_cast<std::size_t>(child.verts[0])];
      Rational height = nloc.dot(apex_local) - nloc.dot(wit_local);
      if (height < 0) height = -height;
      total += height * volume_bc_rec(child.sat);
    }
    result = total / Rational(f.dim);
  }
  memo_bc_.emplace(sat, result);
  return result;
}

HPolytope::HPolytope(Eigen::Index dim, std::vector<Facet> facets)
    : dim_(dim), facets_(std::move(facets)) {
  for (const auto& f : facets_) {
    if (f.normal.size() != dim_) throw std::invalid_argument("facet normal dimension mismatch");
  }
}

Mat HPolytope::normal_matrix() const {
  Mat n(static_cast<Eigen::Index>(facets_.size()), dim_);
  for (std::size_t r = 0; r < facets_.size(); ++r) {
    n.row(static_cast<Eigen::Index>(r)) = facets_[r].normal.transpose();
  }
  return n;
}

bool HPolytope::contains(const Vec& x) const {
  for (const auto& f : facets_) {
    if (f.normal.dot(x) > f.offset) return false;
  }
  return true;
}

const std::vector<VertexData>& HPolytope::vertices() const {
  if (!verts_built_) {
    verts_ = enumerate_vertices(dim_, facets_);
    verts_built_ = true;
  }
  return verts_;
}

std::shared_ptr<FaceSkeleton> HPolytope::skeleton(const AffineLattice& lattice) const {
  if (lattice.dim() != dim_) throw LatticeMismatch("lattice dimension differs from polytope");
  for (const auto& s : slots_) {
    if (s.lattice == lattice) return s.skel;
  }
  LatticeSlot slot;
  slot.lattice = lattice;
  slot.skel = std::make_shared<FaceSkeleton>(normal_matrix(), lattice, vertices());
  std::vector<Vec> coords;
  coords.reserve(vertices().size());
  for (const auto& v : vertices()) coords.push_back(v.point);
  slot.vols = std::make_shared<InstanceVolumes>(slot.skel, coords);
  slots_.push_back(std::move(slot));
  return slots_.back().skel;
}

InstanceVolumes& HPolytope::volumes(const AffineLattice& lattice) const {
  skeleton(lattice);
  for (auto& s : slots_) {
    if (s.lattice == lattice) return *s.vols;
  }
  throw std::logic_error("volume slot missing");
}

FaceHandle face_from_active_set(const HPolytope& p, std::vector<int> active) {
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  for (const int a : active) {
    if (a < 0 || a >= static_cast<int>(p.facets().size())) {
      throw std::invalid_argument("facet index out of range");
    }
  }
  const auto& verts = p.vertices();
  FaceHandle f;
  f.active = active;
  bool first = true;
  for (const auto& v : verts) {
    if (!std::includes(v.active.begin(), v.active.end(), active.begin(), active.end())) continue;
    if (first) {
      f.saturated = v.active;
      first = false;
    } else {
      std::vector<int> tmp;
      std::set_intersection(f.saturated.begin(), f.saturated.end(), v.active.begin(),
                            v.active.end(), std::back_inserter(tmp));
      f.saturated = std::move(tmp);
    }
  }
  if (first) throw EmptyFace("no vertex is tight on the requested facet set");
  Mat nsat(static_cast<Eigen::Index>(f.saturated.size()), p.dim());
  for (std::size_t k = 0; k < f.saturated.size(); ++k) {
    nsat.row(static_cast<Eigen::Index>(k)) = p.facets()[static_cast<std::size_t>(f.saturated[k])].normal.transpose();
  }
  f.dim = static_cast<int>(p.dim() - (f.saturated.empty() ? 0 : rank_of(nsat)));
  return f;
}

FaceHandle whole_polytope_face(const HPolytope& p) { return face_from_active_set(p, {}); }

FaceHandle intersect_faces(const HPolytope& p, const FaceHandle& f, const FaceHandle& g,
                           bool* transverse) {
  std::vector<int> u = f.active;
  u.insert(u.end(), g.active.begin(), g.active.end());
  FaceHandle h = face_from_active_set(p, std::move(u));
  if (transverse) {
    const int d = static_cast<int>(p.dim());
    *transverse = ((d - h.dim) == (d - f.dim) + (d - g.dim));
  }
  return h;
}

Rational lattice_volume(const HPolytope& p, const AffineLattice& lattice, const FaceHandle& f) {
  return p.volumes(lattice).volume(f.saturated);
}

Rational lattice_volume(const HPolytope& p, const AffineLattice& lattice) {
  return lattice_volume(p, lattice, whole_polytope_face(p));
}

Rational lattice_volume_boundary_cone(const HPolytope& p, const AffineLattice& lattice,
                                      const FaceHandle& f) {
  return p.volumes(lattice).volume_boundary_cone(f.saturated);
}

}  // namespace mitosiskit
