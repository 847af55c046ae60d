#include "mitosiskit/json_io.hpp"

#include "mitosiskit/rational.hpp"

#include <stdexcept>

namespace mitosiskit::jsonio {

namespace {

Json cells_json(const std::vector<std::pair<int, int>>& cells) {
  Json arr = Json::array();
  for (const auto& [r, c] : cells) arr.push_back(Json::array({r, c}));
  return arr;
}

Json matrix(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json rational(const Rational& r) { return rational_to_string(r); }

Json vec(const Vec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_string(v(i)));
  return arr;
}

Json polynomial(const MultiPoly& p, const std::vector<std::string>& names) {
  Json j;
  j["variables"] = names;
  j["degree"] = p.degree();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = rational_to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["text"] = p.to_string(names);
  return j;
}

Json polytope(const HPolytope& p) {
  Json j;
  j["dim"] = static_cast<int>(p.dim());
  Json fs = Json::array();
  for (const auto& f : p.facets()) {
    Json jf;
    jf["normal"] = vec(f.normal);
    jf["offset"] = rational_to_string(f.offset);
    fs.push_back(std::move(jf));
  }
  j["facets"] = std::move(fs);
  return j;
}

HPolytope parse_polytope(const Json& j) {
  const int d = j.at("dim").get<int>();
  std::vector<Facet> fs;
  for (const auto& jf : j.at("facets")) {
    const auto& jn = jf.at("normal");
    if (static_cast<int>(jn.size()) != d)
      throw std::invalid_argument("facet normal has wrong length");
    Vec n(d);
    for (int i = 0; i < d; ++i) n(i) = rational_from_string(jn.at(i).get<std::string>());
    fs.push_back({std::move(n), rational_from_string(jf.at("offset").get<std::string>())});
  }
  return HPolytope(d, std::move(fs));
}

Json family(const PolytopeFamily& fam) {
  Json j;
  j["family"] = family_kind_name(fam.kind);
  j["n"] = fam.n;
  j["dim"] = fam.dim;
  j["parameters"] = fam.param_names;
  Json fs = Json::array();
  for (const auto& f : fam.facets) {
    Json jf;
    jf["name"] = f.name;
    jf["normal"] = vec(f.normal);
    jf["offset_coeffs"] = vec(f.offset_coeffs);
    fs.push_back(std::move(jf));
  }
  j["facets"] = std::move(fs);
  if (!(fam.lattice == AffineLattice::standard(fam.dim)))
    j["lattice_basis"] = matrix(fam.lattice.basis);
  if (fam.cone) {
    Json jc;
    jc["blocks"] = fam.cone->blocks();
    Json cf = Json::array();
    for (int f = 0; f < fam.cone->num_facets(); ++f) {
      Json e;
      e["index"] = f;
      e["tag"] = fam.cone->tags()[f].to_string();
      if (!fam.cone_to_family.empty()) e["family_facet"] = fam.cone_to_family[f];
      if (!fam.cone_cells.empty())
        e["cell"] = Json::array({fam.cone_cells[f].first, fam.cone_cells[f].second});
      cf.push_back(std::move(e));
    }
    jc["facets"] = std::move(cf);
    j["cone"] = std::move(jc);
  }
  if (!fam.word_pattern.empty()) j["word_pattern"] = fam.word_pattern;
  return j;
}

Json specialization(const PolytopeFamily& fam, const Specialization& s) {
  Json j;
  j["family"] = family_kind_name(fam.kind);
  j["n"] = fam.n;
  j["params"] = vec(s.params);
  j["degenerate"] = s.degenerate;
  j["distinguished_vertex"] = vec(s.distinguished_vertex);
  j["polytope"] = polytope(s.poly);
  return j;
}

Json cone_face(const PolytopeFamily& fam, const ConeFace& f) {
  Json j;
  j["facets"] = f.set;
  j["dim"] = f.dim;
  if (fam.has_cell_codec()) j["cells"] = cells_json(face_cells(fam, f));
  if (!fam.cone_to_family.empty()) j["family_facets"] = fam.realize_active_set(f);
  return j;
}

Json face_set(const PolytopeFamily& fam, const SchubertFaceSet& s) {
  Json j;
  j["w"] = s.w.to_string();
  j["word"] = s.word;
  j["ops"] = s.ops;
  Json faces = Json::array();
  for (const auto& f : s.faces) faces.push_back(cone_face(fam, f));
  j["faces"] = std::move(faces);
  if (!s.all_words.empty()) j["all_words"] = s.all_words;
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

Json degree_check(const PolytopeFamily& fam, const DegreeCheckReport& r) {
  Json j;
  j["family"] = family_kind_name(fam.kind);
  j["n"] = fam.n;
  j["w"] = r.faces.w.to_string();
  j["word"] = r.faces.word;
  j["length"] = r.ell;
  Json faces = Json::array();
  for (const auto& f : r.faces.faces) faces.push_back(cone_face(fam, f));
  j["faces"] = std::move(faces);
  j["volume_polynomial"] = polynomial(r.volume_side, fam.param_names);
  j["oracle_polynomial"] = polynomial(r.degree_side, fam.param_names);
  j["polynomials_match"] = r.polynomials_match;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["params"] = vec(row.params);
    jr["weight"] = vec(row.weight);
    jr["face_volume_sum"] = rational_to_string(row.face_volume_sum);
    jr["scaled_sum"] = rational_to_string(row.scaled_sum);
    jr["degree"] = rational_to_string(row.degree);
    jr["match"] = row.match;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  if (!r.faces.notes.empty()) j["notes"] = r.faces.notes;
  j["match"] = r.polynomials_match && r.all_rows_match;
  return j;
}

Json structure_constants(const PolytopeFamily& fam, const StructureConstantsReport& r) {
  const RootSystem& rs = fam.root_system();
  Json j;
  j["family"] = family_kind_name(fam.kind);
  j["n"] = fam.n;
  j["u"] = r.u.to_string();
  j["v"] = r.v.to_string();
  j["target_length"] = r.target_length;
  j["zero_by_grading"] = r.zero_by_grading;
  Json cs = Json::array();
  for (const auto& [t, c] : r.constants) {
    Json e;
    e["element"] = t.to_string();
    if (!fam.word_pattern.empty())
      e["word"] = rs.reduced_subwords(fam.word_pattern, t).front();
    e["coeff"] = rational_to_string(c);
    cs.push_back(std::move(e));
  }
  j["constants"] = std::move(cs);
  Json inters = Json::array();
  for (const auto& f : r.intersection_faces) inters.push_back(f);
  j["intersections"] = std::move(inters);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json conjecture(const ConjectureReport& r) {
  Json j;
  j["family"] = "sgz";
  j["n"] = r.n;
  j["verified"] = r.verified;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["w"] = e.w.to_string();
    je["length"] = e.ell;
    je["word"] = e.word;
    Json fc = Json::array();
    for (const auto& cells : e.cells) fc.push_back(cells_json(cells));
    je["faces_cells"] = std::move(fc);
    je["rows_match"] = e.all_rows_match;
    je["polynomials_match"] = e.polynomials_match;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace mitosiskit::jsonio
