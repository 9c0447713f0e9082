#include "knotforge/io.hpp"

#include <fstream>

#include "knotforge/invariants.hpp"

namespace knotforge {

json diagram_to_json(const PlanarDiagram& d) {
    json pd = json::array();
    for (const Crossing& c : d.crossings())
        pd.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
    return json{{"name", d.name()}, {"pd", pd}};
}

PlanarDiagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pd") || !j["pd"].is_array())
        throw input_error("knot file: expected object with a \"pd\" array");
    std::vector<std::array<int, 4>> tuples;
    for (const auto& t : j["pd"]) {
        if (!t.is_array() || t.size() != 4)
            throw input_error("knot file: each pd entry must be a 4-tuple");
        tuples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
    }
    std::string name = j.value("name", "");
    return PlanarDiagram::from_pd(tuples, name);
}

namespace {

json site_to_json(const TwistSite& s) {
    json strands = json::array();
    for (const TwistStrand& st : s.strands) strands.push_back({st.arc, st.orientation});
    return json{{"strands", strands}};
}

TwistSite site_from_json(const json& j) {
    if (!j.is_object() || !j.contains("strands"))
        throw input_error("annulus file: site needs a \"strands\" list");
    TwistSite out;
    for (const auto& st : j["strands"]) {
        if (!st.is_array() || st.size() != 2)
            throw input_error("annulus file: strand entries are [arc, +-1]");
        int orient = st[1].get<int>();
        if (orient != 1 && orient != -1)
            throw input_error("annulus file: strand orientation must be +-1");
        out.strands.push_back({st[0].get<int>(), orient});
    }
    return out;
}

}  // namespace

json annulus_to_json(const AnnulusPresentation& ap) {
    return json{{"knot", diagram_to_json(ap.diagram)},
                {"site1", site_to_json(ap.site1)},
                {"site2", site_to_json(ap.site2)}};
}

AnnulusPresentation annulus_from_json(const json& j) {
    if (!j.is_object() || !j.contains("knot"))
        throw input_error("annulus file: expected object with \"knot\"");
    AnnulusPresentation ap;
    ap.diagram = diagram_from_json(j["knot"]);
    ap.site1 = site_from_json(j.at("site1"));
    ap.site2 = site_from_json(j.at("site2"));
    return ap;
}

json laurent_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        if (c.fits_int64())
            out.push_back({e, c.to_int64()});
        else
            out.push_back({e, c.to_string()});
    }
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) throw input_error("polynomial: expected [[exp, coeff], ...]");
    LaurentPoly out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw input_error("polynomial: expected [exp, coeff] pairs");
        BigInt c = term[1].is_string() ? BigInt::from_string(term[1].get<std::string>())
                                       : BigInt(term[1].get<long long>());
        out.add_term(term[0].get<int>(), c);
    }
    return out;
}

json openbook_to_json(const TwistWord& w) {
    const SurfaceModel& surf = genus2_surface();
    json omega = json::array();
    for (const auto& row : surf.omega) omega.push_back(row);
    json curves = json::object();
    for (const CurveClass& c : named_curves()) curves[c.name] = c.h1;
    json word = json::array();
    for (const TwistLetter& l : w.letters)
        word.push_back({{"curve", l.curve.name}, {"exp", l.exponent}});
    return json{{"genus", surf.genus},
                {"boundary", surf.boundary_components},
                {"omega", omega},
                {"curves", curves},
                {"word", word}};
}

TwistWord word_from_json(const json& j) {
    const json& word = j.is_object() && j.contains("word") ? j["word"] : j;
    if (!word.is_array()) throw input_error("open-book file: expected a \"word\" list");
    TwistWord out;
    for (const auto& l : word) {
        int exp = l.at("exp").get<int>();
        if (exp == 0) throw input_error("open-book file: zero exponent letter");
        out.letters.push_back({curve(l.at("curve").get<std::string>()), exp});
    }
    return out;
}

json surgery_to_json(const SurgeryDescription& desc) {
    json linking = json::array();
    for (const auto& row : desc.linking) linking.push_back(row);
    return json{{"linking", linking}, {"rotations", desc.rotations}, {"q", desc.q}};
}

SurgeryDescription surgery_from_json(const json& j) {
    if (!j.is_object() || !j.contains("linking") || !j.contains("rotations"))
        throw input_error("surgery file: expected linking, rotations, q");
    SurgeryDescription out;
    for (const auto& row : j["linking"]) out.linking.push_back(row.get<IntVector>());
    out.rotations = j["rotations"].get<IntVector>();
    out.q = j.value("q", 0);
    if (out.linking.size() != out.rotations.size())
        throw input_error("surgery file: linking size must match rotations");
    return out;
}

json invariant_report(const PlanarDiagram& d, bool want_jones, bool want_alexander,
                      bool want_determinant) {
    json out{{"knot", d.name()}, {"writhe", d.writhe()}};
    if (want_jones) {
        json pairs = json::array();
        for (const auto& [e, c] : jones(d).t_pairs()) {
            if (c.fits_int64())
                pairs.push_back({e, c.to_int64()});
            else
                pairs.push_back({e, c.to_string()});
        }
        out["jones"] = pairs;
    }
    if (want_alexander || want_determinant) {
        AlexanderPoly alex = alexander(d);
        if (want_alexander) out["alexander"] = laurent_to_json(alex.poly());
        if (want_determinant) {
            BigInt det = alex.poly().evaluate(BigInt(-1)).abs();
            out["determinant"] = det.fits_int64() ? json(det.to_int64()) : json(det.to_string());
        }
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    return json{{"conclusion", to_string(v.conclusion)},
                {"rule", v.rule},
                {"evidence", v.evidence}};
}

json certificate_to_json(const KnotCertificate& c) {
    json out{{"name", c.name},
             {"alexander", laurent_to_json(c.alexander.poly())},
             {"alexander_irreducible", c.alexander_irreducible}};
    json jpairs = json::array();
    for (const auto& [e, coef] : c.jones.t_pairs()) {
        if (coef.fits_int64())
            jpairs.push_back({e, coef.to_int64()});
        else
            jpairs.push_back({e, coef.to_string()});
    }
    out["jones"] = jpairs;
    out["fibered"] = c.fibered ? json(to_string(*c.fibered)) : json(nullptr);
    out["distinctness_evidence"] =
        c.distinctness_evidence ? json(to_string(*c.distinctness_evidence)) : json(nullptr);
    return out;
}

json dichotomy_to_json(const DichotomyReport& r) {
    return json{{"pair", {r.n, r.m}},
                {"knots", {certificate_to_json(r.cert_n), certificate_to_json(r.cert_m)}},
                {"not_ribbon", verdict_to_json(r.not_ribbon)},
                {"fox_milnor_composite", verdict_to_json(r.fox_milnor_composite)},
                {"d3", {{"n", r.d3_n}, {"m", r.d3_m}}},
                {"shared_zero_surgery", r.shared_zero_surgery},
                {"consequences", r.consequences}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace knotforge
