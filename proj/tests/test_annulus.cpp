#include <doctest.h>

#include <map>

#include "knotforge/annulus.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/openbook.hpp"
#include "support/oracles.hpp"

using namespace knotforge;

namespace {

LaurentPoly quartic() {
    LaurentPoly p;
    p.add_term(0, BigInt(1));
    p.add_term(1, BigInt(-3));
    p.add_term(2, BigInt(5));
    p.add_term(3, BigInt(-3));
    p.add_term(4, BigInt(1));
    return p;
}

}  // namespace

TEST_CASE("twist block insertion basics") {
    PlanarDiagram t = oracles::braid_closure(3, {1, -2, -2, 1, -2, 1}, "6_3").canonical();
    // inserting then removing a full twist at the same site is invisible to Jones
    JonesPoly v0 = jones(t);
    for (int rel = -1; rel <= 1; rel += 2) {
        TwistSite site{{{1, 1}, {4, rel}}};
        PlanarDiagram plus = insert_full_twists(t, site, 1);
        CHECK(plus.crossing_count() == t.crossing_count() + 2);
        // +1 then -1 on the matching site of the new diagram cancels: the
        // spliced strands keep their labels
        PlanarDiagram undone = insert_full_twists(plus, site, -1);
        CHECK(jones(simplified(undone)) == v0);
    }
}

TEST_CASE("a double pass of one arc through a disk is a valid site") {
    PlanarDiagram t = oracles::braid_closure(3, {1, -2, -2, 1, -2, 1}, "6_3").canonical();
    JonesPoly v0 = jones(t);
    // U-turn through the disk with nothing between the passes: the twists
    // wind the strand around itself and simplify away
    PlanarDiagram twisted = insert_full_twists(t, TwistSite{{{2, 1}, {2, -1}}}, 1);
    CHECK(twisted.crossing_count() == t.crossing_count() + 2);
    CHECK(jones(twisted) == v0);
    PlanarDiagram wrapped = insert_full_twists(t, TwistSite{{{2, 1}, {2, 1}}}, -1);
    CHECK(wrapped.crossing_count() == t.crossing_count() + 2);
}

TEST_CASE("twist sites validate their strands") {
    PlanarDiagram t = oracles::braid_closure(3, {1, -2, -2, 1, -2, 1}, "6_3").canonical();
    CHECK_THROWS_AS(insert_full_twists(t, TwistSite{{{99, 1}, {1, -1}}}, 1), input_error);
    CHECK_THROWS_AS(insert_full_twists(t, TwistSite{{}}, 1), input_error);
    AnnulusPresentation bad = annulus_presentation_63();
    bad.site2 = bad.site1;
    CHECK_THROWS_AS(annulus_twist(bad, 1), input_error);
    CHECK_THROWS_AS(annulus_twist(annulus_presentation_63(), 9), input_error);
    CHECK_NOTHROW(annulus_twist(annulus_presentation_63(), 9, 9));
}

TEST_CASE("family_63(0) is a diagram of 6_3") {
    PlanarDiagram k0 = family_63(0);
    CHECK(alexander(k0).poly() == quartic());
    CHECK(determinant(k0) == BigInt(13));
    // amphichiral Jones
    LaurentPoly v = jones(k0).in_q();
    CHECK(involute(v) == v);
    // jones of 6_3: -q^-6 + 2q^-4 - 2q^-2 + 3 - 2q^2 + 2q^4 - q^6
    LaurentPoly v63;
    v63.add_term(-6, BigInt(-1));
    v63.add_term(-4, BigInt(2));
    v63.add_term(-2, BigInt(-2));
    v63.add_term(0, BigInt(3));
    v63.add_term(2, BigInt(-2));
    v63.add_term(4, BigInt(2));
    v63.add_term(6, BigInt(-1));
    CHECK(v == v63);
}

TEST_CASE("family alexander polynomials are constant") {
    for (int n = -3; n <= 3; ++n) {
        PlanarDiagram kn = family_63(n);
        CHECK(alexander(kn).poly() == quartic());
    }
}

TEST_CASE("family jones coincidences follow n + m = -1") {
    std::map<int, LaurentPoly> v;
    for (int n = -3; n <= 3; ++n) v[n] = jones(family_63(n)).in_q();
    CHECK(v[0] == v[-1]);
    CHECK(v[1] == v[-2]);
    CHECK(v[2] == v[-3]);
    CHECK(v[0] != v[1]);
    CHECK(v[0] != v[2]);
    CHECK(v[1] != v[2]);
    CHECK(v[3] != v[2]);
    CHECK(v[3] != v[1]);
    CHECK(v[3] != v[0]);
}

TEST_CASE("annulus twist by n then -n on the induced presentation is invisible") {
    const AnnulusPresentation& ap = annulus_presentation_63();
    JonesPoly v0 = jones(simplified(ap.diagram));
    for (int n : {1, 2}) {
        // splice without simplifying so the induced presentation keeps the
        // original site arcs, then undo
        PlanarDiagram once = insert_full_twists(
            insert_full_twists(ap.diagram, ap.site1, -n), ap.site2, n);
        AnnulusPresentation induced{once, ap.site1, ap.site2};
        PlanarDiagram back = annulus_twist(induced, -n);
        CHECK(jones(back) == v0);
    }
}

TEST_CASE("diagram route and monodromy route agree on the family") {
    for (int n = 0; n <= 2; ++n) {
        CHECK(alexander(family_63(n)).poly() ==
              alexander_from_monodromy(word_for_An(n)).poly());
    }
}
