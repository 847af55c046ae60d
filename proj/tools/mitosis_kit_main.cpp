// mitosis-kit: command-line frontend for the polytope family builders,
// mitosis runs, and Schubert-calculus checks. Emits deterministic JSON
// (or text pipe-dream tables with --render text).
//
// Exit codes: 0 success, 1 usage error, 2 mathematical failure.

#include "mitosiskit/errors.hpp"
#include "mitosiskit/json_io.hpp"
#include "mitosiskit/rational.hpp"
#include "mitosiskit/schubert.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mitosiskit::ConeFace;
using mitosiskit::FamilyModel;
using mitosiskit::PolytopeFamily;
using mitosiskit::Rational;
using mitosiskit::Vec;
using Json = mitosiskit::jsonio::Json;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty entry in integer list");
    out.push_back(std::stoi(item));
  }
  return out;
}

Vec parse_rational_list(const std::string& s) {
  std::vector<Rational> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(mitosiskit::rational_from_string(item));
  Vec v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

PolytopeFamily family_from(const std::string& name, int n) {
  return mitosiskit::build_family(mitosiskit::family_kind_from_name(name), n);
}

int default_n(const std::string& name, int n) {
  if (n > 0) return n;
  if (name == "ddo-c2") return 2;
  if (name == "ddo-c3") return 3;
  throw CLI::ValidationError("--n is required for family " + name);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output path: " + output_path);
  out << text;
}

void emit_json(const Json& j, const std::string& output_path) {
  emit(j.dump(2) + "\n", output_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polytope calculus for flag-variety degree checks"};
  app.require_subcommand(1);

  std::string family_name, lambda_str, word_str, ops_str, from_cells, from_facets, u_str, v_str;
  std::string render = "json", output_path;
  int n = 0, rows = 5, face_arg_dummy = 0;
  std::string face_str;
  (void)face_arg_dummy;

  auto add_family_opts = [&](CLI::App* cmd, bool need_family = true) {
    auto* f = cmd->add_option("--family", family_name, "family name")
                  ->check(CLI::IsMember(
                      {"gz-a", "sgz", "ogz", "ddo-c2", "ddo-c3", "string-c"}));
    if (need_family) f->required();
    cmd->add_option("--n", n, "family size parameter");
    cmd->add_option("--output", output_path, "write output to this path instead of stdout");
  };

  auto* cmd_build = app.add_subcommand("build", "emit a family (or one member at --lambda)");
  add_family_opts(cmd_build);
  cmd_build->add_option("--lambda", lambda_str, "comma-separated parameter values");

  auto* cmd_mitosis = app.add_subcommand("mitosis", "apply a written operator sequence");
  add_family_opts(cmd_mitosis);
  cmd_mitosis->add_option("--ops", ops_str, "operator subscripts, rightmost applied first")
      ->required();
  cmd_mitosis->add_option("--from-cells", from_cells,
                          "start face as cells r,c;r,c (default: distinguished vertex)");
  cmd_mitosis->add_option("--from-facets", from_facets,
                          "start face as cone facet indices (default: distinguished vertex)");
  cmd_mitosis->add_option("--render", render, "output form")
      ->check(CLI::IsMember({"json", "text"}));

  auto* cmd_degree = app.add_subcommand("degree-check", "face volumes vs flag-variety degree");
  add_family_opts(cmd_degree);
  cmd_degree->add_option("--word", word_str, "reduced word, user labels")->required();
  cmd_degree->add_option("--lambda", lambda_str, "check at this single parameter point");
  cmd_degree->add_option("--rows", rows, "number of grid rows (default 5)");

  auto* cmd_volpoly = app.add_subcommand("volpoly", "volume polynomial of a family member");
  add_family_opts(cmd_volpoly);
  cmd_volpoly->add_option("--face", face_str,
                          "family facet indices cutting the face (default: whole polytope)");
  cmd_volpoly->add_option("--lambda", lambda_str, "also evaluate at this parameter point");

  auto* cmd_struct = app.add_subcommand("structconst", "Schubert structure constants");
  add_family_opts(cmd_struct);
  cmd_struct->add_option("--u", u_str, "reduced word of u, user labels")->required();
  cmd_struct->add_option("--v", v_str, "reduced word of v, user labels")->required();

  auto* cmd_ranks = app.add_subcommand("ring-ranks", "derivative ranks of the volume polynomial");
  add_family_opts(cmd_ranks);

  auto* cmd_conj = app.add_subcommand("conjecture-report",
                                      "degree checks for every Weyl element over sgz(n)");
  cmd_conj->add_option("--n", n, "family size parameter")->required();
  cmd_conj->add_option("--rows", rows, "number of grid rows (default 5)");
  cmd_conj->add_option("--output", output_path, "write output to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_build->parsed()) {
      const PolytopeFamily fam = family_from(family_name, default_n(family_name, n));
      if (lambda_str.empty()) {
        emit_json(mitosiskit::jsonio::family(fam), output_path);
      } else {
        const auto s = mitosiskit::specialize(fam, parse_rational_list(lambda_str));
        emit_json(mitosiskit::jsonio::specialization(fam, s), output_path);
      }
    } else if (cmd_mitosis->parsed()) {
      const PolytopeFamily fam = family_from(family_name, default_n(family_name, n));
      if (!from_cells.empty() && !from_facets.empty())
        throw CLI::ValidationError("--from-cells and --from-facets are exclusive");
      ConeFace start;
      if (!from_facets.empty()) {
        start = mitosiskit::make_cone_face(fam.vertex_cone(), parse_int_list(from_facets));
      } else if (!from_cells.empty()) {
        std::vector<std::pair<int, int>> cells;
        std::stringstream ss(from_cells);
        std::string item;
        while (std::getline(ss, item, ';')) {
          const auto rc = parse_int_list(item);
          if (rc.size() != 2) throw CLI::ValidationError("cells must be pairs r,c");
          cells.push_back({rc[0], rc[1]});
        }
        start = mitosiskit::face_from_cells(fam, cells);
      } else {
        start = fam.distinguished_vertex_face();
      }
      const auto ops = parse_int_list(ops_str);
      std::vector<std::string> notes;
      const auto faces =
          mitosiskit::mitosis_apply(fam.vertex_cone(), start, fam.ops_to_blocks(ops), &notes);
      if (render == "text") {
        std::ostringstream os;
        for (std::size_t i = 0; i < faces.size(); ++i) {
          if (i) os << "\n";
          os << mitosiskit::render_cells_text(fam, mitosiskit::face_cells(fam, faces[i]));
        }
        emit(os.str(), output_path);
      } else {
        Json j;
        j["family"] = mitosiskit::family_kind_name(fam.kind);
        j["n"] = fam.n;
        j["ops"] = ops;
        j["start"] = mitosiskit::jsonio::cone_face(fam, start);
        Json jf = Json::array();
        for (const auto& f : faces) jf.push_back(mitosiskit::jsonio::cone_face(fam, f));
        j["faces"] = std::move(jf);
        if (!notes.empty()) j["notes"] = notes;
        emit_json(j, output_path);
      }
    } else if (cmd_degree->parsed()) {
      FamilyModel model(family_from(family_name, default_n(family_name, n)));
      const auto word = parse_int_list(word_str);
      mitosiskit::DegreeCheckReport rep;
      if (!lambda_str.empty()) {
        // Single-point row: keep the polynomial comparison, replace the grid.
        rep = mitosiskit::degree_check_for_word(model, word, 1);
        const Vec params = parse_rational_list(lambda_str);
        const auto& fam = model.family();
        mitosiskit::DegreeCheckRow row;
        row.params = params;
        row.weight = fam.weight_map * params;
        row.face_volume_sum = 0;
        for (const auto& f : rep.faces.faces)
          row.face_volume_sum += model.face_volume(fam.realize_active_set(f), params);
        Rational fact = 1;
        for (int i = 2; i <= rep.ell; ++i) fact *= i;
        row.scaled_sum = row.face_volume_sum * fact;
        row.degree = fam.root_system().degree(rep.faces.w, row.weight);
        row.match = row.scaled_sum == row.degree;
        rep.rows = {row};
        rep.all_rows_match = row.match;
      } else {
        rep = mitosiskit::degree_check_for_word(model, word, rows);
      }
      emit_json(mitosiskit::jsonio::degree_check(model.family(), rep), output_path);
    } else if (cmd_volpoly->parsed()) {
      FamilyModel model(family_from(family_name, default_n(family_name, n)));
      const std::vector<int> active =
          face_str.empty() ? std::vector<int>{} : parse_int_list(face_str);
      const auto poly = model.face_volume_polynomial(active);
      Json j;
      j["family"] = mitosiskit::family_kind_name(model.family().kind);
      j["n"] = model.family().n;
      if (!face_str.empty()) j["face"] = active;
      j["volume_polynomial"] = mitosiskit::jsonio::polynomial(poly, model.family().param_names);
      if (!lambda_str.empty()) {
        const Vec params = parse_rational_list(lambda_str);
        j["params"] = mitosiskit::jsonio::vec(params);
        j["volume"] = mitosiskit::rational_to_string(model.face_volume(active, params));
      }
      emit_json(j, output_path);
    } else if (cmd_struct->parsed()) {
      FamilyModel model(family_from(family_name, default_n(family_name, n)));
      const auto& rs = model.family().root_system();
      const auto rep = mitosiskit::structure_constants(
          model, rs.element_of_word(parse_int_list(u_str)),
          rs.element_of_word(parse_int_list(v_str)));
      emit_json(mitosiskit::jsonio::structure_constants(model.family(), rep), output_path);
    } else if (cmd_ranks->parsed()) {
      FamilyModel model(family_from(family_name, default_n(family_name, n)));
      const auto ranks = mitosiskit::graded_ring_ranks(model);
      Json j;
      j["family"] = mitosiskit::family_kind_name(model.family().kind);
      j["n"] = model.family().n;
      j["ranks"] = ranks;
      int total = 0;
      for (int r : ranks) total += r;
      j["total"] = total;
      j["volume_polynomial"] = mitosiskit::jsonio::polynomial(model.volume_polynomial(),
                                                              model.family().param_names);
      emit_json(j, output_path);
    } else if (cmd_conj->parsed()) {
      const auto rep = mitosiskit::conjecture_report(n, rows);
      emit_json(mitosiskit::jsonio::conjecture(rep), output_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    std::cerr << "mathematical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
