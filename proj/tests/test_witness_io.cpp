#include <doctest.h>

#include "rssep/witness_io.hpp"

using namespace rssep;
using nlohmann::json;

TEST_CASE("element JSON forms") {
    const auto f11 = Field::make(11, 1);
    CHECK(element_to_json(*f11, f11->element(7)) == json("7"));
    CHECK(element_from_json(f11, json("7")).value == 7);
    CHECK_THROWS_AS(element_from_json(f11, json("11")), Error);
    CHECK_THROWS_AS(element_from_json(f11, json("x")), Error);

    const auto f9 = Field::make(3, 2);
    CHECK(element_to_json(*f9, f9->element(5)) == json::array({2, 1}));
    CHECK(element_from_json(f9, json::array({2, 1})).value == 5);
    CHECK_THROWS_AS(element_from_json(f9, json::array({3, 0})), Error);
}

TEST_CASE("witness documents round-trip byte for byte") {
    const auto f = Field::make(11, 1);
    for (const WitnessPair& w :
         {construct_q11_c2(f), construct_c2_third(f), construct_gen_2cm1(f, 3),
          construct_lin_factor(f, 2, 5)}) {
        const json doc = witness_to_json(w);
        const std::string bytes = canonical_dump(doc);
        const WitnessPair back = witness_from_json(doc);
        CHECK(canonical_dump(witness_to_json(back)) == bytes);
        CHECK(back.theorem == w.theorem);
        CHECK(back.c == w.c);
        CHECK(back.claimed_d == w.claimed_d);
        REQUIRE(back.U.size() == w.U.size());
        // the parsed witness lives in its own field context; compare by text
        for (std::size_t i = 0; i < w.U.size(); ++i)
            CHECK(to_text(back.U[i]) == to_text(w.U[i]));
        CHECK(verify_witness(back).pass);
    }
}

TEST_CASE("extension-field witnesses serialize coefficient vectors") {
    const auto f9 = Field::make(3, 2);
    const WitnessPair w = construct_c2_third(f9);
    const json doc = witness_to_json(w);
    CHECK(doc.at("points").at(0).is_array());
    const WitnessPair back = witness_from_json(doc);
    CHECK(verify_witness(back).pass);
    CHECK(canonical_dump(witness_to_json(back)) == canonical_dump(doc));
}

TEST_CASE("malformed documents are rejected with a parse error") {
    const auto f = Field::make(11, 1);
    json doc = witness_to_json(construct_c2_third(f));
    SUBCASE("missing field") {
        doc.erase("U");
        CHECK_THROWS_AS(witness_from_json(doc), Error);
    }
    SUBCASE("q contradiction") {
        doc["q"] = 13;
        CHECK_THROWS_AS(witness_from_json(doc), Error);
    }
    SUBCASE("garbled polynomial") {
        doc["U"][0] = "5 + * x";
        CHECK_THROWS_AS(witness_from_json(doc), Error);
    }
}

TEST_CASE("verification reports serialize clause names") {
    const auto f = Field::make(11, 1);
    WitnessPair bad = construct_q11_c2(f);
    bad.U[0] = bad.U[1];
    const VerifyReport rep = verify_witness(bad);
    const json j = report_to_json(rep);
    CHECK(j.at("verdict") == "FAIL");
    CHECK(j.at("failed_clause") == "distinct_polynomials");
    CHECK(j.at("ta_threshold") == "33/4");
}
