#include <doctest.h>

#include "cla/error.hpp"
#include "cla/io.hpp"
#include "support.hpp"

using namespace testing_support;
using cla::io::json;

namespace {

std::string error_of(const json& j)
{
    try {
        cla::io::algebra_from_json(j);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("field descriptors")
{
    CHECK(io::field_from_json("Q").is_rational());
    CHECK(io::field_from_json("F_5").characteristic() == 5);
    CHECK(io::field_from_json(7).characteristic() == 7);
    CHECK(io::field_from_json(json{{"p", 3}}).characteristic() == 3);
    CHECK_THROWS_AS(io::field_from_json("F_6"), InputError);
    CHECK_THROWS_AS(io::field_from_json(2), InputError);
    CHECK(io::field_from_json(2, true).characteristic() == 2);
    CHECK_THROWS_AS(io::field_from_json("R"), InputError);
    CHECK(io::field_to_json(Field::prime(5)) == json{{"p", 5}});
    CHECK(io::field_to_json(Field::rationals()) == "Q");
}

TEST_CASE("algebra JSON")
{
    json j = json::parse(R"({"dim": 3, "field": "Q", "label": "h",
        "bracket1": [[1, 2, [[3, 1]]]],
        "bracket2": [[1, 2, [[3, "1"]]], [1, 3, [[1, 2]]], [2, 3, [[2, "-2"]]]]})");
    auto g = io::algebra_from_json(j);
    CHECK(g == heisenberg_sl2());
    CHECK(g.label() == "h");
    CHECK(io::algebra_from_json(io::algebra_to_json(g)) == g);

    // Reversed index order stores the negative.
    auto r = io::algebra_from_json(json::parse(R"({"dim": 2, "field": "F_5", "bracket1": [[2, 1, [[1, "3/2"]]]]})"));
    CHECK(r.coefficient(L, 0, 1, 0) == Scalar::parse(Field::prime(5), "-3/2"));
}

TEST_CASE("algebra JSON diagnostics name the offending element")
{
    CHECK(error_of(json::parse(R"({"field": "Q"})")).find("dim") != std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 2})")).find("field") != std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 2, "field": "Q", "bracket1": [[1, 3, [[1, 1]]]]})"))
              .find("bracket1[0][1]") != std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 2, "field": "Q", "bracket2": [[1, 2, [[1, "a/b"]]]]})"))
              .find("bracket2[0][2][0][1]") != std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 2, "field": "Q", "bracket1": [[1, 1, []]]})")).find("itself") !=
          std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 3, "field": "Q", "bracket1": [[1, 2, []], [2, 1, []]]})"))
              .find("twice") != std::string::npos);
    CHECK(error_of(json::parse(R"({"dim": 2, "field": "F_5", "bracket1": [[1, 2, [[1, "1/5"]]]]})")) != "");
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("cocycle and extension JSON")
{
    Field f3 = Field::prime(3);
    auto w = gamma_cocycle(f3, 3, {{1, 1}, {5, 2}});
    json j = io::cocycle_to_json(w);
    CHECK(j == json::parse(R"([["1", "0", "0"], ["0", "2", "0"]])"));
    CHECK(io::cocycle_from_json(f3, 3, j) == w);
    CHECK_THROWS_AS(io::cocycle_from_json(f3, 3, json::parse(R"([["1"], ["0"]])")), InputError);

    ExtensionSpec spec{n32(f3), {{w}}};
    auto back = io::extension_from_json(io::extension_to_json(spec));
    CHECK(back.base == spec.base);
    CHECK(back.cocycle.components == spec.cocycle.components);
}

TEST_CASE("property: JSON round trip re-verifies every classified algebra")
{
    for (std::uint32_t p : {3u, 5u}) {
        for (const auto& e : classify(4, Field::prime(p))) {
            json j = io::entry_to_json(e);
            auto g = io::algebra_from_json(json::parse(j["algebra"].dump()));
            CHECK(g == e.algebra);
            CHECK(verify(g).ok());
            CHECK(j["label"] == e.label);
            CHECK(j["relations"] == relations_string(e.algebra));
        }
    }
}

TEST_CASE("property: classification JSON is deterministic")
{
    ClassifyOptions opt;
    auto a = io::entries_to_json(classify(4, Field::prime(3), opt)).dump();
    auto b = io::entries_to_json(classify(4, Field::prime(3), opt)).dump();
    CHECK(a == b);
    opt.backend = Backend::Serial;
    CHECK(io::entries_to_json(classify(4, Field::prime(3), opt)).dump() == a);
}
