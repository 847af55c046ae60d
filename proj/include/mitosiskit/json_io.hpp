#pragma once

#include "mitosiskit/families.hpp"
#include "mitosiskit/schubert.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mitosiskit::jsonio {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
Json vec(const Vec& v);
Json polynomial(const MultiPoly& p, const std::vector<std::string>& names);

// {"dim": d, "facets": [{"normal": [...], "offset": "p/q"}]}
Json polytope(const HPolytope& p);
HPolytope parse_polytope(const Json& j);

Json family(const PolytopeFamily& fam);
Json specialization(const PolytopeFamily& fam, const Specialization& s);
Json cone_face(const PolytopeFamily& fam, const ConeFace& f);
Json face_set(const PolytopeFamily& fam, const SchubertFaceSet& s);
Json degree_check(const PolytopeFamily& fam, const DegreeCheckReport& r);
Json structure_constants(const PolytopeFamily& fam, const StructureConstantsReport& r);
Json conjecture(const ConjectureReport& r);

}  // namespace mitosiskit::jsonio
