#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotforge/invariants.hpp"

namespace knotforge {

enum class FiberednessSource {
    KnotTable,        // stated in the knot tables
    ZeroSurgery,      // inherited through the shared 0-surgery
};

enum class DistinctnessEvidence {
    JonesMismatch,
    D3Mismatch,
};

// Everything the rule engine may rely on for one knot. Fiberedness is an
// asserted flag with provenance, never a computed property.
struct KnotCertificate {
    std::string name;
    AlexanderPoly alexander;
    bool alexander_irreducible = false;
    JonesPoly jones;
    std::optional<FiberednessSource> fibered;
    std::optional<DistinctnessEvidence> distinctness_evidence;
};

enum class Conclusion {
    NotRibbon,
    FoxMilnorObstructed,
    Inconclusive,
    NotApplicable,
};

// Machine-checkable verdict: the conclusion, the rule that fired, and the
// evidence used. The engine only obstructs or abstains; it never claims
// "ribbon" or "slice" positively.
struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string rule;
    std::vector<std::string> evidence;
};

std::string to_string(Conclusion c);
std::string to_string(FiberednessSource s);
std::string to_string(DistinctnessEvidence e);

// Classical Fox-Milnor slice obstruction on a single knot's Alexander
// polynomial: obstructed iff no witness factorization exists.
Verdict fox_milnor_verdict(const KnotCertificate& c);

// Ribbon obstruction for the composite K0 # mirror(K1) of fibered knots with
// irreducible Alexander polynomials: NotRibbon when both certificates are
// fibered, both irreducible, and the knots are certified distinct.
Verdict miyazaki_verdict(const KnotCertificate& c0, const KnotCertificate& c1);

// Builds a certificate by computing the invariants of a diagram.
KnotCertificate make_certificate(const PlanarDiagram& d, const std::string& name,
                                 std::optional<FiberednessSource> fibered);

// Report for the pair (K_n, K_m) of the twist family: the composite is not
// ribbon, the two knots share their 0-surgery, so either the two knots are
// a counterexample to "same 0-surgery implies concordant" or the composite
// is a counterexample to the slice-ribbon conjecture. Requires the knots to
// be distinct (n != m and n + m != -1).
struct DichotomyReport {
    int n = 0;
    int m = 0;
    KnotCertificate cert_n;
    KnotCertificate cert_m;
    Verdict not_ribbon;
    Verdict fox_milnor_composite;
    std::string d3_n;
    std::string d3_m;
    std::string shared_zero_surgery;
    std::vector<std::string> consequences;
};

DichotomyReport dichotomy_report(int n, int m);

}  // namespace knotforge
