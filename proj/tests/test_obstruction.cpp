#include <doctest.h>

#include "knotforge/invariants.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/obstruction.hpp"
#include "support/oracles.hpp"

using namespace knotforge;

namespace {

LaurentPoly delta_63() {
    LaurentPoly p;
    p.add_term(0, BigInt(1));
    p.add_term(1, BigInt(-3));
    p.add_term(2, BigInt(5));
    p.add_term(3, BigInt(-3));
    p.add_term(4, BigInt(1));
    return p;
}

KnotCertificate cert_63(bool fibered = true) {
    PlanarDiagram d = oracles::braid_closure(3, {1, -2, -2, 1, -2, 1}, "6_3");
    return make_certificate(d, "6_3",
                            fibered ? std::optional<FiberednessSource>(
                                          FiberednessSource::KnotTable)
                                    : std::nullopt);
}

KnotCertificate cert_unknot() {
    return make_certificate(PlanarDiagram::unknot(), "unknot",
                            FiberednessSource::KnotTable);
}

}  // namespace

TEST_CASE("fox_milnor_verdict") {
    // unknot: witness f = 1 exists
    CHECK(fox_milnor_verdict(cert_unknot()).conclusion == Conclusion::Inconclusive);
    // 6_3: irreducible quartic admits no witness
    CHECK(fox_milnor_verdict(cert_63()).conclusion == Conclusion::FoxMilnorObstructed);
    // composite with Delta = quartic^2: witness exists, Fox-Milnor passes
    KnotCertificate composite = cert_63();
    composite.name = "6_3 # mirror(6_3')";
    composite.alexander = AlexanderPoly(normalize(delta_63() * delta_63()));
    CHECK(fox_milnor_verdict(composite).conclusion == Conclusion::Inconclusive);
}

TEST_CASE("miyazaki_verdict requires every hypothesis") {
    KnotCertificate c0 = cert_63();
    KnotCertificate c1 = cert_63();
    c1.name = "K_1";
    c1.distinctness_evidence = DistinctnessEvidence::JonesMismatch;

    CHECK(miyazaki_verdict(c0, c1).conclusion == Conclusion::NotRibbon);

    SUBCASE("same knot, no distinctness") {
        c1.distinctness_evidence.reset();
        CHECK(miyazaki_verdict(c0, c1).conclusion == Conclusion::Inconclusive);
    }
    SUBCASE("missing fiberedness on either side") {
        KnotCertificate bad = c0;
        bad.fibered.reset();
        CHECK(miyazaki_verdict(bad, c1).conclusion == Conclusion::NotApplicable);
        CHECK(miyazaki_verdict(c1, bad).conclusion == Conclusion::NotApplicable);
    }
    SUBCASE("missing irreducibility") {
        KnotCertificate bad = c0;
        bad.alexander_irreducible = false;
        CHECK(miyazaki_verdict(bad, c1).conclusion == Conclusion::NotApplicable);
        CHECK(miyazaki_verdict(c1, bad).conclusion == Conclusion::NotApplicable);
    }
    SUBCASE("symmetric in its arguments") {
        CHECK(miyazaki_verdict(c0, c1).conclusion == miyazaki_verdict(c1, c0).conclusion);
    }
    SUBCASE("non-conclusive verdicts carry the failed hypothesis") {
        KnotCertificate bad = c0;
        bad.fibered.reset();
        Verdict v = miyazaki_verdict(bad, c1);
        REQUIRE(!v.evidence.empty());
        CHECK(v.evidence[0].find("fibered") != std::string::npos);
    }
}

TEST_CASE("verdicts never claim ribbon or slice") {
    for (const Verdict& v : {fox_milnor_verdict(cert_unknot()),
                             miyazaki_verdict(cert_63(), cert_63())}) {
        std::string c = to_string(v.conclusion);
        bool never_positive = c.find("Ribbon") == std::string::npos || c == "NotRibbon";
        CHECK(never_positive);
    }
}

TEST_CASE("dichotomy_report rejects same-knot pairs") {
    CHECK_THROWS_AS(dichotomy_report(0, 0), input_error);
    CHECK_THROWS_AS(dichotomy_report(0, -1), input_error);
    CHECK_THROWS_AS(dichotomy_report(2, -3), input_error);
}

TEST_CASE("dichotomy_report for (0,1)") {
    DichotomyReport rep = dichotomy_report(0, 1);
    CHECK(rep.not_ribbon.conclusion == Conclusion::NotRibbon);
    CHECK(rep.fox_milnor_composite.conclusion == Conclusion::Inconclusive);
    CHECK(rep.d3_n == "3/2");
    CHECK(rep.d3_m == "-1/2");
    CHECK(rep.consequences.size() == 2);
    CHECK(rep.cert_n.distinctness_evidence.has_value());
}

TEST_CASE("dichotomy_report uses d3 evidence when jones alone cannot decide") {
    // any valid distinct pair yields a NotRibbon verdict with evidence
    DichotomyReport rep = dichotomy_report(1, 2);
    CHECK(rep.not_ribbon.conclusion == Conclusion::NotRibbon);
    CHECK(rep.d3_n != rep.d3_m);
}
