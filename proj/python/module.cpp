// Python bindings. Each wrapper returns the same JSON document the command
// line tool emits for the matching subcommand, so downstream code can consume
// one format from either entry point. Exact rationals cross the boundary as
// strings ("p/q").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mitosiskit/families.hpp"
#include "mitosiskit/json_io.hpp"
#include "mitosiskit/schubert.hpp"

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using Json = mitosiskit::jsonio::Json;
using mitosiskit::FamilyModel;
using mitosiskit::PolytopeFamily;
using mitosiskit::Rational;
using mitosiskit::Vec;

PolytopeFamily family_of(const std::string& kind, int n) {
  return mitosiskit::build_family(mitosiskit::family_kind_from_name(kind), n);
}

Vec parse_params(const std::vector<std::string>& xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = Rational(xs[i]);
  return v;
}

std::string family_json(const std::string& kind, int n) {
  return mitosiskit::jsonio::family(family_of(kind, n)).dump(2);
}

std::string member_json(const std::string& kind, int n,
                        const std::vector<std::string>& params) {
  const auto fam = family_of(kind, n);
  const auto s = mitosiskit::specialize(fam, parse_params(params));
  return mitosiskit::jsonio::specialization(fam, s).dump(2);
}

std::string mitosis_json(const std::string& kind, int n, const std::vector<int>& ops) {
  const auto fam = family_of(kind, n);
  const auto start = fam.distinguished_vertex_face();
  std::vector<std::string> notes;
  const auto faces =
      mitosiskit::mitosis_apply(fam.vertex_cone(), start, fam.ops_to_blocks(ops), &notes);
  Json j;
  j["family"] = mitosiskit::family_kind_name(fam.kind);
  j["n"] = fam.n;
  j["ops"] = ops;
  j["start"] = mitosiskit::jsonio::cone_face(fam, start);
  Json jf = Json::array();
  for (const auto& f : faces) jf.push_back(mitosiskit::jsonio::cone_face(fam, f));
  j["faces"] = std::move(jf);
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

std::string mitosis_text(const std::string& kind, int n, const std::vector<int>& ops) {
  const auto fam = family_of(kind, n);
  const auto faces = mitosiskit::mitosis_apply(
      fam.vertex_cone(), fam.distinguished_vertex_face(), fam.ops_to_blocks(ops));
  std::string out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += "\n";
    out += mitosiskit::render_cells_text(fam, mitosiskit::face_cells(fam, faces[i]));
  }
  return out;
}

std::string face_set_json(const std::string& kind, int n, const std::vector<int>& word) {
  const auto fam = family_of(kind, n);
  return mitosiskit::jsonio::face_set(fam, mitosiskit::schubert_face_set_for_word(fam, word))
      .dump(2);
}

std::string degree_check_json(const std::string& kind, int n, const std::vector<int>& word,
                              int rows) {
  FamilyModel model(family_of(kind, n));
  const auto rep = mitosiskit::degree_check_for_word(model, word, rows);
  return mitosiskit::jsonio::degree_check(model.family(), rep).dump(2);
}

std::string volume_polynomial_json(const std::string& kind, int n,
                                   const std::vector<int>& face) {
  FamilyModel model(family_of(kind, n));
  Json j;
  j["family"] = mitosiskit::family_kind_name(model.family().kind);
  j["n"] = model.family().n;
  if (!face.empty()) j["face"] = face;
  j["volume_polynomial"] = mitosiskit::jsonio::polynomial(
      model.face_volume_polynomial(face), model.family().param_names);
  return j.dump(2);
}

std::string structure_constants_json(const std::string& kind, int n,
                                     const std::vector<int>& u_word,
                                     const std::vector<int>& v_word) {
  FamilyModel model(family_of(kind, n));
  const auto& rs = model.family().root_system();
  const auto rep = mitosiskit::structure_constants(model, rs.element_of_word(u_word),
                                                   rs.element_of_word(v_word));
  return mitosiskit::jsonio::structure_constants(model.family(), rep).dump(2);
}

std::vector<int> ring_ranks(const std::string& kind, int n) {
  FamilyModel model(family_of(kind, n));
  return mitosiskit::graded_ring_ranks(model);
}

std::string conjecture_json(int n, int rows) {
  return mitosiskit::jsonio::conjecture(mitosiskit::conjecture_report(n, rows)).dump(2);
}

}  // namespace

PYBIND11_MODULE(_mitosiskit, m) {
  m.doc() = "exact polytope calculus for flag-variety degree checks";

  m.def("family_json", &family_json, py::arg("kind"), py::arg("n"),
        "family description as a JSON string");
  m.def("member_json", &member_json, py::arg("kind"), py::arg("n"), py::arg("params"),
        "one family member at the given parameters (rationals as 'p/q' strings)");
  m.def("mitosis_json", &mitosis_json, py::arg("kind"), py::arg("n"), py::arg("ops"),
        "apply a written operator sequence from the distinguished vertex");
  m.def("mitosis_text", &mitosis_text, py::arg("kind"), py::arg("n"), py::arg("ops"),
        "same as mitosis_json, rendered as cell diagrams");
  m.def("face_set_json", &face_set_json, py::arg("kind"), py::arg("n"), py::arg("word"),
        "face set attached to the element with this reduced word");
  m.def("degree_check_json", &degree_check_json, py::arg("kind"), py::arg("n"),
        py::arg("word"), py::arg("rows") = 5,
        "scaled face volumes against flag-variety degrees");
  m.def("volume_polynomial_json", &volume_polynomial_json, py::arg("kind"), py::arg("n"),
        py::arg("face") = std::vector<int>{},
        "exact volume polynomial of a face (default: whole polytope)");
  m.def("structure_constants_json", &structure_constants_json, py::arg("kind"),
        py::arg("n"), py::arg("u_word"), py::arg("v_word"),
        "expand a product of two Schubert classes");
  m.def("ring_ranks", &ring_ranks, py::arg("kind"), py::arg("n"),
        "derivative ranks of the volume polynomial, one per order");
  m.def("conjecture_json", &conjecture_json, py::arg("n"), py::arg("rows") = 5,
        "degree checks for every Weyl element over the symplectic family");
}
