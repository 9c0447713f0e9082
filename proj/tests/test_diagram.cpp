#include <doctest.h>

#include <random>

#include "knotforge/diagram.hpp"
#include "support/oracles.hpp"

using knotforge::PlanarDiagram;

namespace {

PlanarDiagram left_trefoil() {
    return PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "3_1");
}

PlanarDiagram figure_eight() {
    return PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", "4_1");
}

std::vector<int> random_braid_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> word;
    for (int i = 0; i < length; ++i) {
        int g = gen(rng);
        word.push_back(sign(rng) ? g : -g);
    }
    return word;
}

}  // namespace

TEST_CASE("parse accepts the standard trefoil PD") {
    PlanarDiagram d = left_trefoil();
    CHECK(d.crossing_count() == 3);
    CHECK(d.arc_count() == 6);
    CHECK(d.writhe() == -3);
}

TEST_CASE("parse of empty text gives the unknot") {
    PlanarDiagram d = PlanarDiagram::parse("");
    CHECK(d.crossing_count() == 0);
    CHECK(d.arc_count() == 0);
    CHECK(d.writhe() == 0);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,1,2,2) X(3,3,4,4)"), knotforge::input_error);
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,2,3"), knotforge::input_error);
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,2,3,4,5)"), knotforge::input_error);
    // arc appearing once
    CHECK_THROWS_WITH_AS(PlanarDiagram::parse("X(1,2,3,4) X(1,2,3,5)"),
                         doctest::Contains("arc"), knotforge::input_error);
    // two-component link (Hopf link)
    CHECK_THROWS_AS(PlanarDiagram::parse("X(1,3,2,4) X(3,1,4,2)"), knotforge::input_error);
}

TEST_CASE("single kink validates and has writhe -1") {
    PlanarDiagram d = PlanarDiagram::parse("X(1,2,2,1)");
    CHECK(d.crossing_count() == 1);
    CHECK(d.writhe() == -1);
}

TEST_CASE("mirror is an involution and flips writhe") {
    for (const PlanarDiagram& d : {left_trefoil(), figure_eight()}) {
        PlanarDiagram m = d.mirrored();
        CHECK(m.writhe() == -d.writhe());
        CHECK(m.mirrored().same_diagram(d));
    }
    CHECK(PlanarDiagram::unknot().mirrored().crossing_count() == 0);
}

TEST_CASE("reverse is an involution and preserves writhe") {
    for (const PlanarDiagram& d : {left_trefoil(), figure_eight()}) {
        PlanarDiagram r = d.reversed();
        CHECK(r.writhe() == d.writhe());
        CHECK(r.reversed().same_diagram(d));
    }
}

TEST_CASE("connected sum") {
    PlanarDiagram t = left_trefoil();
    PlanarDiagram f = figure_eight();
    PlanarDiagram s = connected_sum(t, f);
    CHECK(s.crossing_count() == t.crossing_count() + f.crossing_count());
    CHECK(s.writhe() == t.writhe() + f.writhe());
    CHECK(connected_sum(t, PlanarDiagram::unknot()).same_diagram(t.canonical()));
    CHECK(connected_sum(PlanarDiagram::unknot(), f).same_diagram(f.canonical()));
}

TEST_CASE("simplify removes kinks and clasps") {
    CHECK(simplified(PlanarDiagram::parse("X(1,2,2,1)")).crossing_count() == 0);
    // closure of sigma_1 sigma_1^{-1} sigma_1 carries an R2 pair then a kink
    PlanarDiagram clasp = oracles::braid_closure(2, {1, -1, 1});
    CHECK(simplified(clasp).crossing_count() == 0);
    // reduced diagrams stay fixed
    CHECK(simplified(left_trefoil()).same_diagram(left_trefoil().canonical()));
    CHECK(simplified(figure_eight()).same_diagram(figure_eight().canonical()));
}

TEST_CASE("simplify never increases crossing count on random braids") {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        auto word = random_braid_word(rng, 3, 8);
        PlanarDiagram d;
        try {
            d = oracles::braid_closure(3, word);
        } catch (const knotforge::input_error&) {
            continue;  // braid closed to a link
        }
        PlanarDiagram s = simplified(d);
        CHECK(s.crossing_count() <= d.crossing_count());
    }
}

TEST_CASE("validation accepts everything the operations produce") {
    std::mt19937 rng(29);
    int checked = 0;
    while (checked < 40) {
        auto word = random_braid_word(rng, 3, 7);
        PlanarDiagram d;
        try {
            d = oracles::braid_closure(3, word);
        } catch (const knotforge::input_error&) {
            continue;
        }
        ++checked;
        CHECK_NOTHROW(d.mirrored());
        CHECK_NOTHROW(d.reversed());
        CHECK_NOTHROW(simplified(d));
        CHECK_NOTHROW(connected_sum(d, d));
    }
}

TEST_CASE("braid closure of sigma_1^3 is the right trefoil") {
    PlanarDiagram d = oracles::braid_closure(2, {1, 1, 1});
    CHECK(d.crossing_count() == 3);
    CHECK(d.writhe() == 3);
}
