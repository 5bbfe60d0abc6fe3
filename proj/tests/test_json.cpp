#include <doctest.h>

#include "torsec/json_io.hpp"
#include "torsec/relations.hpp"

using namespace torsec;

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "4", "2/3", "-4/125", "7/24", "1/6"}) {
        Rat q = rat_from_string(s);
        CHECK(rat_to_string(q) == s);
    }
    CHECK(rat_from_string("8/12") == rat(2, 3));  // canonicalized on parse
    CHECK_THROWS(rat_from_string("abc"));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string(""));
}

TEST_CASE("relation report round trip") {
    FiberConfiguration config({6, 3, 2, 1}, 1, true);
    ComponentAssignment a(config, {3, 0, 1, 0}, 2);
    for (const RelationReport& rep :
         {check_quadratic(config, a), check_sum_order2(config, a),
          check_integrality(config, a), check_fixed_point_sum(config, a, 2)}) {
        nlohmann::json j = relation_to_json(rep);
        RelationReport back = relation_from_json(j);
        CHECK(back.id == rep.id);
        CHECK(back.lhs == rep.lhs);
        CHECK(back.rhs == rep.rhs);
        CHECK(back.holds == rep.holds);
    }
}

TEST_CASE("input document parsing") {
    const std::string text = R"({
        "fibers": [6, 3, 2, 1],
        "chi": 1,
        "sections": [
            {"order": 2, "components": [3, 0, 1, 0]},
            {"order": 3, "components": [2, 1, 0, 0]}
        ]
    })";
    InputDocument doc = parse_input_document(text);
    CHECK(doc.fibers == std::vector<long>{6, 3, 2, 1});
    CHECK(doc.chi == 1);
    REQUIRE(doc.sections.size() == 2);
    CHECK(doc.sections[0].order == 2);
    CHECK(doc.sections[1].components == std::vector<long>{2, 1, 0, 0});

    CHECK_THROWS_AS(parse_input_document("not json"), InputError);
    CHECK_THROWS_AS(parse_input_document(R"({"chi": 1})"), InputError);

    // sections are optional
    InputDocument bare = parse_input_document(R"({"fibers": [12], "chi": 1})");
    CHECK(bare.sections.empty());
}

TEST_CASE("unknown relation names are rejected") {
    nlohmann::json j{{"relation", "nonsense"}, {"lhs", "1"}, {"rhs", "1"}, {"holds", true}};
    CHECK_THROWS_AS(relation_from_json(j), InputError);
}
