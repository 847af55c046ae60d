#include "mitosiskit/schubert.hpp"

#include "mitosiskit/errors.hpp"
#include "mitosiskit/threads.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mitosiskit {

namespace {

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::vector<Rational> key_of(const Vec& params) {
  std::vector<Rational> k(params.size());
  for (Eigen::Index i = 0; i < params.size(); ++i) k[i] = params(i);
  return k;
}

}  // namespace

FamilyModel::FamilyModel(PolytopeFamily fam)
    : fam_(std::move(fam)), ref_(specialize(fam_, fam_.reference_params())) {
  if (ref_.degenerate)
    throw std::invalid_argument(fam_.display_name + ": reference parameters are degenerate");
  skel_ = ref_.poly.skeleton(fam_.lattice);
  const auto& verts = ref_.poly.vertices();
  const Mat n_all = ref_.poly.normal_matrix();
  Mat c_all(static_cast<Eigen::Index>(fam_.facets.size()), fam_.nparams);
  for (std::size_t f = 0; f < fam_.facets.size(); ++f)
    c_all.row(static_cast<Eigen::Index>(f)) = fam_.facets[f].offset_coeffs.transpose();

  const int d = fam_.dim;
  for (const auto& v : verts) {
    // Pick d active rows of full rank, then invert the linear system
    // N_S x = C_S params once; the vertex depends linearly on the parameters.
    std::vector<int> chosen;
    Mat sub(d, d);
    int have = 0;
    for (int f : v.active) {
      if (have == d) break;
      sub.row(have) = n_all.row(f);
      if (rank_of(sub.topRows(have + 1)) == have + 1) {
        chosen.push_back(f);
        ++have;
      }
    }
    if (have != d) throw std::logic_error("vertex active set is rank deficient");
    Mat rhs(d, fam_.nparams);
    for (int r = 0; r < d; ++r) rhs.row(r) = c_all.row(chosen[r]);
    Eigen::FullPivLU<Mat> lu(sub);
    Mat vmap = lu.solve(rhs);
    if (vmap * ref_.params != v.point)
      throw std::logic_error("vertex map does not reproduce the reference vertex");
    vertex_maps_.push_back(std::move(vmap));
  }
}

FamilyModel::Instance& FamilyModel::instance_for(const Vec& params) {
  const auto key = key_of(params);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = instances_.find(key);
  if (it != instances_.end()) return it->second;

  Instance inst;
  bool ok = fam_.strictly_valid(params);
  std::vector<Vec> coords;
  if (ok) {
    const auto& verts = ref_.poly.vertices();
    const Mat n_all = ref_.poly.normal_matrix();
    coords.reserve(verts.size());
    for (const auto& m : vertex_maps_) coords.push_back(m * params);
    // The shared skeleton is only trusted when every vertex reproduces the
    // reference tightness pattern exactly.
    Vec offs(static_cast<Eigen::Index>(fam_.facets.size()));
    for (std::size_t f = 0; f < fam_.facets.size(); ++f)
      offs(static_cast<Eigen::Index>(f)) = fam_.facets[f].offset_coeffs.transpose().dot(params);
    for (std::size_t v = 0; v < verts.size() && ok; ++v) {
      const Vec slack = n_all * coords[v] - offs;
      std::size_t p = 0;
      for (Eigen::Index f = 0; f < slack.size() && ok; ++f) {
        const bool tight =
            p < verts[v].active.size() && verts[v].active[p] == static_cast<int>(f);
        if (tight) {
          ++p;
          if (slack(f) != 0) ok = false;
        } else if (!(slack(f) < 0)) {
          ok = false;
        }
      }
    }
  }
  if (ok) {
    inst.shared = true;
    inst.vols = std::make_shared<InstanceVolumes>(skel_, coords);
  } else {
    std::vector<Facet> fs;
    for (const auto& f : fam_.facets)
      fs.push_back({f.normal, f.offset_coeffs.transpose().dot(params)});
    inst.fresh = std::make_shared<HPolytope>(fam_.dim, std::move(fs));
  }
  return instances_.emplace(key, std::move(inst)).first->second;
}

Rational FamilyModel::face_volume(const std::vector<int>& active, const Vec& params) {
  const int ref_dim = skel_->face(active).dim;
  Instance& inst = instance_for(params);
  if (inst.shared) {
    try {
      return inst.vols->volume(active);
    } catch (const ModelInvalidated&) {
      // Combinatorics silently changed: rebuild this member from scratch.
      std::vector<Facet> fs;
      for (const auto& f : fam_.facets)
        fs.push_back({f.normal, f.offset_coeffs.transpose().dot(params)});
      std::lock_guard<std::mutex> lock(mu_);
      inst.shared = false;
      inst.vols.reset();
      inst.fresh = std::make_shared<HPolytope>(fam_.dim, std::move(fs));
    }
  }
  try {
    FaceHandle h = face_from_active_set(*inst.fresh, active);
    if (h.dim > ref_dim) throw std::logic_error("face gained dimension off the chamber");
    if (h.dim < ref_dim) return 0;  // collapsed face has zero top-dimensional volume
    return lattice_volume(*inst.fresh, fam_.lattice, h);
  } catch (const EmptyFace&) {
    return 0;
  } catch (const EmptyPolytope&) {
    return 0;
  }
}

Rational FamilyModel::polytope_volume(const Vec& params) { return face_volume({}, params); }

namespace {

// Fit a homogeneous polynomial to samples over the family grid, enlarging the
// grid when a prefix happens to lie on a hypersurface of the target degree.
MultiPoly interpolate_over_grid(const PolytopeFamily& fam, int nvars, int degree, bool parallel,
                                const std::function<Rational(const Vec&)>& sample) {
  const int m = static_cast<int>(homogeneous_exponents(nvars, degree).size());
  std::string last_error;
  for (int round = 0; round < 3; ++round) {
    const int npts = m + 3 + round * m;
    const auto points = fam.parameter_grid(npts);
    std::vector<Rational> values(points.size());
    values[0] = sample(points[0]);  // warm shared structures once
    if (parallel) {
      parallel_for(points.size() - 1,
                   [&](std::size_t i) { values[i + 1] = sample(points[i + 1]); });
    } else {
      for (std::size_t i = 1; i < points.size(); ++i) values[i] = sample(points[i]);
    }
    try {
      return interpolate_homogeneous(nvars, degree, points, values);
    } catch (const InterpolationRankDeficient& e) {
      last_error = e.what();
    }
  }
  throw InterpolationRankDeficient(last_error + " (after 3 grid enlargements)");
}

}  // namespace

MultiPoly FamilyModel::face_volume_polynomial(const std::vector<int>& active) {
  const auto key = skel_->face(active).sat;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = poly_memo_.find(key);
    if (it != poly_memo_.end()) return it->second;
  }
  const int k = skel_->face(active).dim;
  const int p = fam_.nparams;
  MultiPoly poly(p);
  if (k == 0) {
    poly = MultiPoly::constant(p, 1);
  } else {
    poly = interpolate_over_grid(fam_, p, k, /*parallel=*/true,
                                 [&](const Vec& v) { return face_volume(key, v); });
  }
  std::lock_guard<std::mutex> lock(mu_);
  return poly_memo_.emplace(key, std::move(poly)).first->second;
}

MultiPoly FamilyModel::volume_polynomial() { return face_volume_polynomial({}); }

SchubertFaceSet schubert_face_set_for_word(const PolytopeFamily& fam,
                                           const std::vector<int>& word) {
  const RootSystem& rs = fam.root_system();
  SchubertFaceSet out;
  out.w = rs.element_of_word(word);
  if (rs.length(out.w) != static_cast<int>(word.size()))
    throw std::invalid_argument("word is not reduced");
  out.word = word;
  out.ops = fam.ops_for_word(word);
  const ConeFace start = fam.distinguished_vertex_face();
  out.faces = mitosis_apply(fam.vertex_cone(), start, out.ops, &out.notes);
  return out;
}

SchubertFaceSet schubert_face_set(const PolytopeFamily& fam, const SignedPerm& w) {
  if (fam.word_pattern.empty())
    throw UnsupportedKind(fam.display_name + " has no distinguished word pattern");
  const RootSystem& rs = fam.root_system();
  const auto words = rs.reduced_subwords(fam.word_pattern, w);
  SchubertFaceSet out = schubert_face_set_for_word(fam, words.front());
  out.all_words = words;
  return out;
}

namespace {

DegreeCheckReport degree_check_impl(FamilyModel& model, SchubertFaceSet faces, int grid_rows) {
  const PolytopeFamily& fam = model.family();
  const RootSystem& rs = fam.root_system();
  DegreeCheckReport rep;
  rep.faces = std::move(faces);
  rep.ell = static_cast<int>(rep.faces.word.size());
  const int p = fam.nparams;

  std::vector<std::vector<int>> actives;
  for (const auto& f : rep.faces.faces) actives.push_back(fam.realize_active_set(f));

  MultiPoly vol_side(p);
  for (const auto& a : actives) vol_side = vol_side + model.face_volume_polynomial(a);
  rep.volume_side = vol_side * factorial(rep.ell);

  rep.degree_side =
      interpolate_over_grid(fam, p, rep.ell, /*parallel=*/false, [&](const Vec& v) {
        return rs.degree(rep.faces.w, fam.weight_map * v);
      });
  rep.polynomials_match = rep.volume_side == rep.degree_side;

  rep.all_rows_match = true;
  for (const auto& params : fam.parameter_grid(grid_rows)) {
    DegreeCheckRow row;
    row.params = params;
    row.weight = fam.weight_map * params;
    row.face_volume_sum = 0;
    for (const auto& a : actives) row.face_volume_sum += model.face_volume(a, params);
    row.scaled_sum = row.face_volume_sum * factorial(rep.ell);
    row.degree = rs.degree(rep.faces.w, row.weight);
    row.match = row.scaled_sum == row.degree;
    rep.all_rows_match = rep.all_rows_match && row.match;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

DegreeCheckReport degree_check(FamilyModel& model, const SignedPerm& w, int grid_rows) {
  return degree_check_impl(model, schubert_face_set(model.family(), w), grid_rows);
}

DegreeCheckReport degree_check_for_word(FamilyModel& model, const std::vector<int>& word,
                                        int grid_rows) {
  return degree_check_impl(model, schubert_face_set_for_word(model.family(), word), grid_rows);
}

StructureConstantsReport structure_constants(FamilyModel& model, const SignedPerm& u,
                                             const SignedPerm& v) {
  const PolytopeFamily& fam = model.family();
  const RootSystem& rs = fam.root_system();
  StructureConstantsReport rep;
  rep.u = u;
  rep.v = v;
  rep.target_length = rs.length(u) + rs.length(v) - fam.dim;
  if (rep.target_length < 0) {
    rep.zero_by_grading = true;
    return rep;
  }
  const SchubertFaceSet su = schubert_face_set(fam, u);
  const SchubertFaceSet sv = schubert_face_set(fam, v);
  const HPolytope& poly = model.reference_polytope();
  const int p = fam.nparams;

  MultiPoly rhs(p);
  for (const auto& cu : su.faces) {
    const FaceHandle a = face_from_active_set(poly, fam.realize_active_set(cu));
    for (const auto& cv : sv.faces) {
      const FaceHandle b = face_from_active_set(poly, fam.realize_active_set(cv));
      bool transverse = false;
      FaceHandle c;
      try {
        c = intersect_faces(poly, a, b, &transverse);
      } catch (const EmptyFace&) {
        continue;
      }
      if (!transverse) {
        std::ostringstream os;
        os << "faces " << cu.set.size() << "-set and " << cv.set.size()
           << "-set meet non-transversally on the reference member";
        throw TransversalityFailure(os.str());
      }
      rep.intersection_faces.push_back(c.saturated);
      rhs = rhs + model.face_volume_polynomial(c.saturated);
    }
  }

  const auto by_len = rs.elements_by_length();
  const auto& basis = by_len.at(rep.target_length);
  std::vector<MultiPoly> basis_polys;
  for (const auto& t : basis) {
    const SchubertFaceSet st = schubert_face_set(fam, t);
    MultiPoly pt(p);
    for (const auto& f : st.faces)
      pt = pt + model.face_volume_polynomial(fam.realize_active_set(f));
    basis_polys.push_back(std::move(pt));
  }

  const auto exps = homogeneous_exponents(p, rep.target_length);
  std::map<std::vector<int>, int> row_of;
  for (std::size_t i = 0; i < exps.size(); ++i) row_of[exps[i]] = static_cast<int>(i);
  Mat a = Mat::Zero(static_cast<Eigen::Index>(exps.size()),
                    static_cast<Eigen::Index>(basis.size()));
  Vec b = Vec::Zero(static_cast<Eigen::Index>(exps.size()));
  for (std::size_t j = 0; j < basis_polys.size(); ++j)
    for (const auto& [e, c] : basis_polys[j].terms())
      a(row_of.at(e), static_cast<Eigen::Index>(j)) = c;
  for (const auto& [e, c] : rhs.terms()) b(row_of.at(e)) = c;

  if (rank_of(a) < static_cast<Eigen::Index>(basis.size()))
    throw DependentBasis("face volume polynomials of the length-" +
                         std::to_string(rep.target_length) + " classes are dependent");
  const auto sol = solve_exact(a, b);
  if (!sol)
    throw std::logic_error("intersection volumes do not decompose over the Schubert basis");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Rational c = (*sol)(static_cast<Eigen::Index>(j));
    if (c != 0) rep.constants.emplace_back(basis[j], c);
  }
  return rep;
}

std::vector<int> graded_ring_ranks(FamilyModel& model) {
  const MultiPoly vol = model.volume_polynomial();
  const int deg = vol.degree();
  const int p = model.family().nparams;
  std::vector<int> ranks;
  for (int k = 0; k <= deg; ++k) {
    const auto orders = homogeneous_exponents(p, k);
    const auto monoms = homogeneous_exponents(p, deg - k);
    std::map<std::vector<int>, int> col_of;
    for (std::size_t i = 0; i < monoms.size(); ++i) col_of[monoms[i]] = static_cast<int>(i);
    Mat a = Mat::Zero(static_cast<Eigen::Index>(orders.size()),
                      static_cast<Eigen::Index>(monoms.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const MultiPoly dp = vol.derivative(orders[i]);
      for (const auto& [e, c] : dp.terms())
        a(static_cast<Eigen::Index>(i), col_of.at(e)) = c;
    }
    ranks.push_back(static_cast<int>(rank_of(a)));
  }
  return ranks;
}

DiffOperator DiffOperator::partial(int nparams, int index) {
  return DiffOperator(MultiPoly::variable(nparams, index));
}

DiffOperator DiffOperator::operator*(const DiffOperator& o) const {
  return DiffOperator(sym_ * o.sym_);
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
  return DiffOperator(sym_ + o.sym_);
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
  return DiffOperator(sym_ - o.sym_);
}

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : sym_.terms()) out = out + p.derivative(e) * c;
  return out;
}

DiffOperator facet_derivative(FamilyModel& model, int facet_index) {
  const PolytopeFamily& fam = model.family();
  if (facet_index < 0 || facet_index >= static_cast<int>(fam.facets.size()))
    throw std::invalid_argument("facet index out of range");
  if (fam.nparams != static_cast<int>(fam.facets.size()))
    throw NotSimple(fam.display_name + ": facet offsets are not independent parameters");
  for (int f = 0; f < fam.nparams; ++f) {
    bool unit = true;
    for (int j = 0; j < fam.nparams; ++j)
      unit = unit && fam.facets[f].offset_coeffs(j) == (j == f ? 1 : 0);
    if (!unit)
      throw NotSimple(fam.display_name + ": facet offsets are not independent parameters");
  }
  auto check_simple = [&](const Vec& params, const char* where) {
    const Specialization s = specialize(fam, params);
    for (const auto& v : s.poly.vertices())
      if (static_cast<int>(v.active.size()) != fam.dim)
        throw NotSimple(fam.display_name + ": member is not simple at the " + where + " point");
  };
  check_simple(fam.reference_params(), "reference");
  check_simple(fam.parameter_grid(1).front(), "sample");
  return DiffOperator::partial(fam.nparams, facet_index);
}

ConjectureReport conjecture_report(int n, int grid_rows) {
  FamilyModel model(build_family(FamilyKind::SGZ, n));
  const PolytopeFamily& fam = model.family();
  const RootSystem& rs = fam.root_system();
  ConjectureReport rep;
  rep.n = n;
  rep.verified = true;
  const auto by_len = rs.elements_by_length();
  for (std::size_t ell = 0; ell < by_len.size(); ++ell) {
    for (const auto& w : by_len[ell]) {
      DegreeCheckReport r = degree_check(model, w, grid_rows);
      ConjectureEntry e;
      e.w = w;
      e.ell = static_cast<int>(ell);
      e.word = r.faces.word;
      for (const auto& f : r.faces.faces) e.cells.push_back(face_cells(fam, f));
      e.all_rows_match = r.all_rows_match;
      e.polynomials_match = r.polynomials_match;
      rep.verified = rep.verified && e.all_rows_match && e.polynomials_match;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace mitosiskit
