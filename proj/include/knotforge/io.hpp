#pragma once

#include <string>

#include <json.hpp>

#include "knotforge/annulus.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/obstruction.hpp"
#include "knotforge/openbook.hpp"

namespace knotforge {

using nlohmann::json;

// Knot file: { "name": string, "pd": [[a,b,c,d], ...] }; the unknot is [].
json diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const json& j);

// Annulus-presentation file:
// { "knot": <knot file>, "site1": {"strands": [[arc,+-1],...]}, "site2": ... }
json annulus_to_json(const AnnulusPresentation& ap);
AnnulusPresentation annulus_from_json(const json& j);

// Sparse polynomial serialization: [[exponent, coefficient], ...] ascending.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// Open-book file: { "genus", "boundary", "omega", "curves", "word" }.
json openbook_to_json(const TwistWord& w);
TwistWord word_from_json(const json& j);

// Surgery file: { "linking": [[...]], "rotations": [...], "q": int }.
json surgery_to_json(const SurgeryDescription& desc);
SurgeryDescription surgery_from_json(const json& j);

// Invariant report: { "knot", "jones", "alexander", "determinant", "writhe" }.
// Flags select which invariants are computed and included.
json invariant_report(const PlanarDiagram& d, bool want_jones, bool want_alexander,
                      bool want_determinant);

json verdict_to_json(const Verdict& v);
json certificate_to_json(const KnotCertificate& c);
json dichotomy_to_json(const DichotomyReport& r);

json read_json_file(const std::string& path);
std::string canonical_dump(const json& j);

}  // namespace knotforge
