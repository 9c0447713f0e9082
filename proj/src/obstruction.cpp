#include "knotforge/obstruction.hpp"

#include "knotforge/annulus.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/openbook.hpp"

namespace knotforge {

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NotRibbon: return "NotRibbon";
        case Conclusion::FoxMilnorObstructed: return "FoxMilnorObstructed";
        case Conclusion::Inconclusive: return "Inconclusive";
        case Conclusion::NotApplicable: return "NotApplicable";
    }
    return "Inconclusive";
}

std::string to_string(FiberednessSource s) {
    switch (s) {
        case FiberednessSource::KnotTable: return "knot-table";
        case FiberednessSource::ZeroSurgery: return "zero-surgery";
    }
    return "knot-table";
}

std::string to_string(DistinctnessEvidence e) {
    switch (e) {
        case DistinctnessEvidence::JonesMismatch: return "jones-mismatch";
        case DistinctnessEvidence::D3Mismatch: return "d3-mismatch";
    }
    return "jones-mismatch";
}

Verdict fox_milnor_verdict(const KnotCertificate& c) {
    Verdict v;
    v.rule = "Fox-Milnor (Alexander polynomial factors as f(t)f(1/t) up to units)";
    auto witness = fox_milnor(c.alexander.poly());
    if (witness) {
        v.conclusion = Conclusion::Inconclusive;
        v.evidence.push_back("witness f = " + witness->to_string() + " for " + c.name);
    } else {
        v.conclusion = Conclusion::FoxMilnorObstructed;
        v.evidence.push_back("no Fox-Milnor witness for Alexander polynomial of " + c.name);
    }
    return v;
}

Verdict miyazaki_verdict(const KnotCertificate& c0, const KnotCertificate& c1) {
    Verdict v;
    v.rule = "Miyazaki Cor. (fibered, irreducible Alexander)";
    if (!c0.fibered || !c1.fibered) {
        v.conclusion = Conclusion::NotApplicable;
        v.evidence.push_back("fiberedness not certified for " +
                             (c0.fibered ? c1.name : c0.name));
        return v;
    }
    if (!c0.alexander_irreducible || !c1.alexander_irreducible) {
        v.conclusion = Conclusion::NotApplicable;
        v.evidence.push_back("Alexander polynomial not certified irreducible for " +
                             (c0.alexander_irreducible ? c1.name : c0.name));
        return v;
    }
    if (!c0.distinctness_evidence && !c1.distinctness_evidence) {
        v.conclusion = Conclusion::Inconclusive;
        v.evidence.push_back("no evidence that " + c0.name + " and " + c1.name +
                             " are distinct knots");
        return v;
    }
    v.conclusion = Conclusion::NotRibbon;
    v.evidence.push_back(c0.name + " fibered (" + to_string(*c0.fibered) + ")");
    v.evidence.push_back(c1.name + " fibered (" + to_string(*c1.fibered) + ")");
    v.evidence.push_back("both Alexander polynomials irreducible");
    DistinctnessEvidence ev = c0.distinctness_evidence ? *c0.distinctness_evidence
                                                       : *c1.distinctness_evidence;
    v.evidence.push_back("distinctness: " + to_string(ev));
    return v;
}

KnotCertificate make_certificate(const PlanarDiagram& d, const std::string& name,
                                 std::optional<FiberednessSource> fibered) {
    AlexanderPoly alex = alexander(d);
    KnotCertificate cert{name,
                         alex,
                         alex.poly().span() >= 1 && is_irreducible(alex.poly()),
                         jones(d),
                         fibered,
                         std::nullopt};
    return cert;
}

DichotomyReport dichotomy_report(int n, int m) {
    if (same_fibered_knot(n, m))
        throw input_error("dichotomy_report: K_" + std::to_string(n) + " and K_" +
                          std::to_string(m) + " are the same fibered knot");
    DichotomyReport rep;
    rep.n = n;
    rep.m = m;

    auto fibered = [](int k) {
        return k == 0 ? FiberednessSource::KnotTable : FiberednessSource::ZeroSurgery;
    };
    // Jones distinctness is computed from the diagrams for small twists;
    // the d3 values of the fibered structures separate all pairs.
    rep.cert_n = make_certificate(family_63(n), "K_" + std::to_string(n), fibered(n));
    rep.cert_m = make_certificate(family_63(m), "K_" + std::to_string(m), fibered(m));
    Rational dn = family_d3(n), dm = family_d3(m);
    rep.d3_n = dn.to_string();
    rep.d3_m = dm.to_string();
    if (rep.cert_n.jones != rep.cert_m.jones) {
        rep.cert_n.distinctness_evidence = DistinctnessEvidence::JonesMismatch;
        rep.cert_m.distinctness_evidence = DistinctnessEvidence::JonesMismatch;
    } else if (dn != dm) {
        rep.cert_n.distinctness_evidence = DistinctnessEvidence::D3Mismatch;
        rep.cert_m.distinctness_evidence = DistinctnessEvidence::D3Mismatch;
    }

    rep.not_ribbon = miyazaki_verdict(rep.cert_n, rep.cert_m);

    KnotCertificate composite = rep.cert_n;
    composite.name = rep.cert_n.name + " # mirror(" + rep.cert_m.name + ")";
    composite.alexander = AlexanderPoly(
        normalize(rep.cert_n.alexander.poly() * rep.cert_m.alexander.poly()));
    rep.fox_milnor_composite = fox_milnor_verdict(composite);

    rep.shared_zero_surgery =
        "asserted: 0-surgeries on all twists of one annulus presentation give the "
        "same 3-manifold (Osoinach)";
    rep.consequences = {
        "if K_" + std::to_string(n) + " and K_" + std::to_string(m) +
            " are concordant, their composite with one mirrored is a slice knot "
            "that is not ribbon",
        "if they are not concordant, two knots with the same 0-surgery are not "
            "concordant",
    };
    return rep;
}

}  // namespace knotforge
