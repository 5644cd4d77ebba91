#include <doctest.h>

#include "icx/errors.hpp"
#include "icx/io.hpp"
#include "icx/symmetric.hpp"
#include "../support/fixtures.hpp"

using namespace icx;

TEST_CASE("instance round trip") {
    for (const Instance& inst : {fixtures::aligned_pairs(), gen_x_network(6, 2), gen_neighboring_antidotes(8, 1, 2),
                                 gen_neighboring_interference(9, 1, 2)}) {
        const std::string text = serialize_instance(inst);
        CHECK(parse_instance(text) == inst);
        CHECK(serialize_instance(parse_instance(text)) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("aligned pairs file parses and validates") {
    const std::string text = R"({
  "messages": 4,
  "destinations": [
    {"id": 1, "wants": [1, 2], "has": []},
    {"id": 2, "wants": [1, 3], "has": [4]},
    {"id": 3, "wants": [2, 4], "has": [3]}
  ]
})";
    CHECK(parse_instance(text) == fixtures::aligned_pairs());
}

TEST_CASE("instance parse errors") {
    CHECK_THROWS_AS(parse_instance(R"({"messages": 1, "destinations": [{"id": 1, "wants": [1], "has": [1]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"messages": 1, "extra": 0, "destinations": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"messages": 1, "destinations": [{"id": 1, "wants": ["a"]}]})"), ParseError);
    try {
        parse_instance("{\n  \"messages\": 1,\n  \"destinations\": [\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.where() == "line 4");
    }
    try {
        parse_instance(R"({"messages": 2, "destinations": [{"id": 1, "wants": [1]}, {"id": 2, "wants": [2], "has": [2]}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.where() == "destination 2");
    }
    const Instance unchecked = instance_from_json(
        parse_json_text(R"({"messages": 1, "destinations": [{"id": 1, "wants": [1], "has": [1]}]})"), false);
    CHECK(validate(unchecked).size() == 1);
}

TEST_CASE("scheme round trip") {
    for (int id = 1; id <= 3; ++id) {
        const BuiltinExample ex = builtin_example(id, Field::prime(3));
        const std::string text = serialize_scheme(ex.scheme);
        const LinearScheme back = parse_scheme(text);
        CHECK(serialize_scheme(back) == text);
        CHECK(back.V == ex.scheme.V);
        CHECK(back.U == ex.scheme.U);
    }
    const LinearScheme gf = [] {
        LinearScheme s(Field::gf2m(4), 2);
        s.V.emplace(1, Matrix::from_rows(s.field, {{7}, {15}}));
        return s;
    }();
    CHECK(parse_scheme(serialize_scheme(gf)).V.at(1) == gf.V.at(1));
}

TEST_CASE("scheme parse errors") {
    CHECK_THROWS_AS(parse_scheme(R"({"field": {"kind": "prime", "p": 4}, "n": 1, "V": {}})"), InvalidField);
    CHECK_THROWS_AS(parse_scheme(R"({"field": {"kind": "prime", "p": 2}, "n": 1, "V": {"x": [[1]]}})"), ParseError);
    CHECK_THROWS_AS(parse_scheme(R"({"field": {"kind": "prime", "p": 2}, "n": 1, "V": {"1": [[1]]}, "U": {"1": [[1]]}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_scheme(R"({"field": {"kind": "prime", "p": 2}, "n": 2, "V": {"1": [[1], [1, 0]]}})"),
                    ParseError);
}

TEST_CASE("field flag") {
    CHECK(parse_field_flag("p=3") == Field::prime(3));
    CHECK(parse_field_flag("gf2m=4") == Field::gf2m(4));
    CHECK_THROWS_AS(parse_field_flag("q=3"), ParseError);
    CHECK_THROWS_AS(parse_field_flag("p=x"), ParseError);
    CHECK_THROWS_AS(parse_field_flag("p=6"), InvalidField);
}
