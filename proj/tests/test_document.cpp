#include <doctest.h>

#include "qtoric/document.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/fixtures.hpp"

using namespace qtoric;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_documents(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("every fixture parses, validates and round-trips") {
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        CHECK_FALSE(f.documents.empty());
        for (const auto& doc : f.documents) {
            const auto text = to_text(serialize(doc));
            const auto back = parse_documents(text);
            REQUIRE(back.size() == 1);
            CHECK(back[0].payload == doc.payload);
            // Canonical: serializing the parsed copy gives byte-identical text.
            CHECK(to_text(serialize(back[0])) == text);
            CHECK(to_text(serialize(doc)) == text);
        }
    }
}

TEST_CASE("Barnette text") {
    const auto& docs = fixture("barnette").documents;
    const std::string text = to_text(serialize(docs[0]));
    const auto k = std::get<SimplicialComplex>(parse_documents(text)[0].payload);
    CHECK(k.num_vertices == 8);
    CHECK(k.facets.size() == 19);
    CHECK(text.find("\"kind\": \"simplicial_complex\"") != std::string::npos);
}

TEST_CASE("arrays of documents and 1-based indices") {
    const auto docs = parse_documents(R"([
        {"kind": "simplicial_complex", "num_vertices": 3, "facets": [[1, 2], [2, 3], [3, 1]]},
        {"kind": "charmap", "rank": 2, "vectors": [[1, 0], [0, 1], [-1, -1]]}
    ])");
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].kind() == "simplicial_complex");
    CHECK(std::get<SimplicialComplex>(docs[0].payload).facets[2] == IndexSet{2, 0});
    CHECK(docs[1].kind() == "charmap");
}

TEST_CASE("big integers survive") {
    const auto docs = parse_documents(
        R"({"kind": "charmap", "rank": 2, "vectors": [["123456789012345678901234567890", 1], [1, 0]]})");
    const auto& m = std::get<CharacteristicMap>(docs[0].payload);
    CHECK(m[0][0] == BigInt("123456789012345678901234567890"));
    CHECK(serialize_int(m[0][0]) == nlohmann::json("123456789012345678901234567890"));
    CHECK(serialize_int(BigInt(-5)) == nlohmann::json(-5));
}

TEST_CASE("sqrt2 numbers are fraction pairs") {
    const Sqrt2Number x(BigRational(1, 2), BigRational(-3, 4));
    const auto j = serialize_sqrt2(x);
    CHECK(j == nlohmann::json{{"rat", "1/2"}, {"sqrt2", "-3/4"}});
    CHECK(parse_sqrt2(j, "x") == x);
    CHECK(parse_sqrt2(nlohmann::json("5/3"), "x") == Sqrt2Number(BigRational(5, 3)));
    CHECK_THROWS_AS(parse_sqrt2(nlohmann::json{{"rat", "1"}}, "x"), SchemaError);
    CHECK_THROWS_AS(parse_sqrt2(nlohmann::json(0.5), "x"), SchemaError);
}

TEST_CASE("schema errors name the field") {
    CHECK_THROWS_AS(parse_documents(R"({"kind": "simplicial_complex", "num_vertices": 3, "facets": []})"), SchemaError);
    const auto ragged = message_of(R"({"kind": "charmap", "rank": 4, "vectors": [[1,0,0,0],[0,1,0],[0,0,1,0]]})");
    CHECK(ragged.find("facet 2") != std::string::npos);
    const auto unknown = message_of(R"({"kind": "orientation", "tuples": [[1,2]], "colour": 1})");
    CHECK(unknown.find("colour") != std::string::npos);
    const auto kind = message_of(R"({"kind": "mystery"})");
    CHECK(kind.find("mystery") != std::string::npos);
    CHECK_THROWS_AS(parse_documents(R"({"kind": "angles", "multiples_of_pi": [0, "1/3"]})"), FieldCoverageError);
    CHECK_THROWS_AS(parse_documents(R"({"kind": "search_config", "bound": 1, "goal": "best", "base_vertex": [1, 2]})"), SchemaError);
}

TEST_CASE("malformed text reports line and column") {
    try {
        parse_documents("{\n  \"kind\": \"charmap\",\n  \"rank\": 2,,\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("search configs round-trip with optional fields") {
    SearchConfig c;
    c.bound = 2;
    c.goal = SearchGoal::all_positive;
    c.base_vertex = {1, 0, 2, 6};
    c.facet_order = IndexSet{3, 4, 5};
    c.solution_cap = 10;
    c.node_budget = 5000;
    c.jobs = 2;
    const auto back = parse_document(serialize(Document{c}));
    CHECK(std::get<SearchConfig>(back.payload) == c);
    CHECK(serialize(Document{c})["base_vertex"] == nlohmann::json{2, 1, 3, 7});
}
