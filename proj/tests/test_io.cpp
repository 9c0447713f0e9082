#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "knotforge/cache.hpp"
#include "knotforge/io.hpp"
#include "knotforge/openbook.hpp"

using namespace knotforge;

TEST_CASE("knot file round trip") {
    PlanarDiagram t = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "3_1");
    json j = diagram_to_json(t);
    CHECK(j["name"] == "3_1");
    PlanarDiagram back = diagram_from_json(j);
    CHECK(back.same_diagram(t));
    CHECK(back.name() == "3_1");

    json unknot{{"name", "unknot"}, {"pd", json::array()}};
    CHECK(diagram_from_json(unknot).crossing_count() == 0);
}

TEST_CASE("knot file rejects malformed input") {
    CHECK_THROWS_AS(diagram_from_json(json::parse("{\"name\":\"x\"}")), input_error);
    CHECK_THROWS_AS(diagram_from_json(json::parse("{\"pd\":[[1,2,3]]}")), input_error);
    CHECK_THROWS_AS(diagram_from_json(json::parse("{\"pd\":[[1,1,2,2],[3,3,4,4]]}")),
                    input_error);
}

TEST_CASE("laurent serialization is sparse ascending") {
    LaurentPoly p;
    p.add_term(-2, BigInt(5));
    p.add_term(3, BigInt(-1));
    json j = laurent_to_json(p);
    CHECK(j.dump() == "[[-2,5],[3,-1]]");
    CHECK(laurent_from_json(j) == p);
    // big coefficients pass through as strings
    LaurentPoly big;
    big.add_term(0, BigInt::from_string("123456789012345678901234567890"));
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("surgery file round trip and validation") {
    SurgeryDescription d;
    d.linking = {{-2, 1}, {1, 2}};
    d.rotations = {0, 2};
    d.q = 1;
    json j = surgery_to_json(d);
    SurgeryDescription back = surgery_from_json(j);
    CHECK(back.linking == d.linking);
    CHECK(back.rotations == d.rotations);
    CHECK(back.q == d.q);
    CHECK_THROWS_AS(surgery_from_json(json::parse("{\"linking\":[[0]],\"rotations\":[1,2]}")),
                    input_error);
}

TEST_CASE("invariant report shape") {
    PlanarDiagram t = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "3_1");
    json rep = invariant_report(t, true, true, true);
    CHECK(rep["knot"] == "3_1");
    CHECK(rep["writhe"] == -3);
    CHECK(rep["determinant"] == 3);
    CHECK(rep["alexander"].dump() == "[[0,1],[1,-1],[2,1]]");
    CHECK(rep["jones"].dump() == "[[-4,-1],[-3,1],[-1,1]]");
    json partial = invariant_report(t, false, true, false);
    CHECK(!partial.contains("jones"));
    CHECK(!partial.contains("determinant"));
    CHECK(partial.contains("alexander"));
}

TEST_CASE("open-book file round trip") {
    TwistWord w = word_for_An(2);
    json j = openbook_to_json(w);
    CHECK(j["genus"] == 2);
    CHECK(j["boundary"] == 1);
    CHECK(j["curves"].contains("c'1"));
    TwistWord back = word_from_json(j);
    REQUIRE(back.letters.size() == w.letters.size());
    for (size_t i = 0; i < w.letters.size(); ++i) {
        CHECK(back.letters[i].curve.name == w.letters[i].curve.name);
        CHECK(back.letters[i].exponent == w.letters[i].exponent);
    }
    CHECK(homological_action(back) == homological_action(w));
    CHECK_THROWS_AS(word_from_json(json::parse("{\"word\":[{\"curve\":\"a\",\"exp\":0}]}")),
                    input_error);
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    std::string million(1000000, 'a');
    CHECK(sha256_hex(million) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("invariant cache stores and verifies") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "knotforge_cache_test";
    std::filesystem::remove_all(dir);
    InvariantCache cache(dir.string());
    json report{{"knot", "t"}, {"determinant", 3}};
    std::string key = InvariantCache::key_for(json{{"pd", {1, 2, 3}}});
    CHECK(!cache.lookup(key).has_value());
    cache.store(key, report);
    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == report);
    // cache hit equals fresh recomputation by construction of the key
    std::string key2 = InvariantCache::key_for(json{{"pd", {1, 2, 4}}});
    CHECK(!cache.lookup(key2).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("disabled cache is inert") {
    InvariantCache off{std::string()};
    CHECK(!off.enabled());
    off.store("k", json{{"a", 1}});
    CHECK(!off.lookup("k").has_value());
}
