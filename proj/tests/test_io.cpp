#include <doctest.h>

#include "ovalkit/io.hpp"

using namespace ovalkit;

TEST_CASE("parse_curve_spec: valid spec") {
    const auto s = parse_curve_spec(R"({"a0": 11, "terms": [{"n": 3, "a": 1, "b": 0}]})");
    CHECK(s.a0() == 11.0);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].n == 3);
    CHECK(s.terms()[0].a == 1.0);
}

TEST_CASE("parse_curve_spec: terms optional, a/b default to zero") {
    const auto circle = parse_curve_spec(R"({"a0": 2.5})");
    CHECK(circle.a0() == 2.5);
    CHECK(circle.terms().empty());

    const auto s = parse_curve_spec(R"({"a0": 10, "terms": [{"n": 3, "b": -0.5}]})");
    CHECK(s.terms()[0].a == 0.0);
    CHECK(s.terms()[0].b == -0.5);
}

TEST_CASE("parse_curve_spec: extra keys are ignored") {
    const auto s = parse_curve_spec(R"({"a0": 5, "comment": "an oval", "terms": []})");
    CHECK(s.a0() == 5.0);
}

TEST_CASE("parse_curve_spec: malformed input") {
    CHECK_THROWS_AS(parse_curve_spec("not json"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"terms": []})"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"a0": "eleven"})"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"a0": 5, "terms": [{"a": 1}]})"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"a0": 5, "terms": [{"n": 2, "a": "one"}]})"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"a0": 5, "terms": 3})"), ParseError);
    CHECK_THROWS_AS(parse_curve_spec(R"({"a0": -2})"), ParseError);
}

TEST_CASE("parse_curve_spec: non-convex spec propagates with the violating angle") {
    try {
        parse_curve_spec(R"({"a0": 1, "terms": [{"n": 3, "a": 1}]})");
        FAIL("expected NonConvexCurve");
    } catch (const NonConvexCurve& e) {
        CHECK(e.min_rho() < 0.0);
    }
}

TEST_CASE("curve_spec_json round-trips") {
    const FourierSupport s(10.0, {{2, 2.0, 0.0}, {3, 0.0, -1.0 / 3.0}, {4, -0.25, 0.0}});
    const auto back = parse_curve_spec(curve_spec_json(s));
    CHECK(back.a0() == s.a0());
    REQUIRE(back.terms().size() == s.terms().size());
    for (std::size_t i = 0; i < s.terms().size(); ++i) {
        CHECK(back.terms()[i].n == s.terms()[i].n);
        CHECK(back.terms()[i].a == s.terms()[i].a);
        CHECK(back.terms()[i].b == s.terms()[i].b);
    }
}

TEST_CASE("load_curve_spec: missing file") {
    CHECK_THROWS_AS(load_curve_spec("/nonexistent/path.json"), ParseError);
}
