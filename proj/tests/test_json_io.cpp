// Unit tests for JSON serialization: exact wire format, tolerant parsing,
// and the malformed-versus-invalid error split the tools rely on.
#include <doctest.h>

#include <lamkit/json_io.hpp>

#include <stdexcept>
#include <string>

using namespace lamkit;

namespace {

TriangleCoords sample_d5() {
    return TriangleCoords(PunctureCount(5), {2, 6, 3, 5, 4, 4}, {4, 8, 8, 4});
}

}  // namespace

TEST_CASE("serialized field order is fixed") {
    CHECK(to_json(sample_d5()).dump() ==
          R"({"n":5,"alpha":[2,6,3,5,4,4],"beta":[4,8,8,4]})");
    CHECK(to_json(DynnikovCoords(PunctureCount(5), {2, 1, 0}, {-2, 0, 2})).dump() ==
          R"({"n":5,"a":[2,1,0],"b":[-2,0,2]})");
    CHECK(to_json(RelaxedCurve(PunctureCount(5), 2, 4)).dump() == R"({"n":5,"i":2,"j":4})");
    CHECK(to_json(IntervalFamily(PunctureCount(4), {{1, 2, 3}})).dump() ==
          R"({"n":4,"components":[{"i":1,"j":2,"mult":3}]})");
}

TEST_CASE("diagrams serialize with strip indices and end markers") {
    TriangleCoords c12 =
        triangle_from_dynnikov(DynnikovCoords(PunctureCount(4), {0, 0}, {1, 0}));
    CHECK(to_json(reconstruct(c12)).dump() ==
          R"({"n":4,"components":[[{"strip":1,"kind":"right_loop","lane":1},)"
          R"({"strip":"L","kind":"left_loop","lane":2}]]})");
}

TEST_CASE("parsing inverts serialization") {
    TriangleCoords t = sample_d5();
    CHECK(triangle_from_json(parse_line(to_json(t).dump())) == t);

    DynnikovCoords d(PunctureCount(5), {2, 1, 0}, {-2, 0, 2});
    CHECK(dynnikov_from_json(parse_line(to_json(d).dump())) == d);

    RelaxedCurve c(PunctureCount(5), 2, 4);
    CHECK(curve_from_json(parse_line(to_json(c).dump())) == c);

    IntervalFamily f(PunctureCount(5), {{1, 2, 5}, {1, 3, 1}, {4, 5, 2}});
    CHECK(family_from_json(parse_line(to_json(f).dump())) == f);
}

TEST_CASE("coordinate form is detected from the fields present") {
    AnyCoords triangle = coords_from_json(parse_line(R"({"n":3,"alpha":[1,1],"beta":[2,0]})"));
    CHECK(std::holds_alternative<TriangleCoords>(triangle));

    AnyCoords dynnikov = coords_from_json(parse_line(R"({"n":3,"a":[0],"b":[1]})"));
    CHECK(std::holds_alternative<DynnikovCoords>(dynnikov));

    CHECK_THROWS_AS(coords_from_json(parse_line(R"({"n":3})")), ParseError);
    CHECK_THROWS_AS(coords_from_json(parse_line(R"({"n":3,"a":[0],"beta":[2,0]})")), ParseError);
    CHECK_THROWS_AS(coords_from_json(parse_line(R"([1,2,3])")), ParseError);
}

TEST_CASE("unknown fields are ignored") {
    DynnikovCoords d = dynnikov_from_json(parse_line(R"({"n":3,"a":[0],"b":[1],"note":"hi"})"));
    CHECK(d.b == std::vector<Coord>{1});
}

TEST_CASE("structural problems are parse errors") {
    CHECK_THROWS_AS(parse_line("{not json"), ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"alpha":[1,1],"beta":[2,0]})")), ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"n":3,"alpha":[1,1]})")), ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"n":3,"alpha":[1,1,1],"beta":[2,0]})")),
                    ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"n":2,"alpha":[],"beta":[0]})")), ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"n":3,"alpha":[1,1.5],"beta":[2,0]})")),
                    ParseError);
    CHECK_THROWS_AS(triangle_from_json(parse_line(R"({"n":3,"alpha":[1,"x"],"beta":[2,0]})")),
                    ParseError);
    CHECK_THROWS_AS(
        triangle_from_json(parse_line(R"({"n":3,"alpha":[1,9223372036854775808],"beta":[2,0]})")),
        ParseError);
    CHECK_THROWS_AS(family_from_json(parse_line(R"({"n":4,"components":{"i":1}})")), ParseError);
    CHECK_THROWS_AS(family_from_json(parse_line(R"({"n":4,"components":[{"i":1,"j":2}]})")),
                    ParseError);
}

TEST_CASE("domain rule violations are not parse errors") {
    auto expect_domain_error = [](auto&& call) {
        try {
            call();
            FAIL("expected an exception");
        } catch (const ParseError&) {
            FAIL("should not be a parse error");
        } catch (const std::invalid_argument&) {
            // expected: a well-formed request for something that does not exist
        }
    };
    expect_domain_error([] { curve_from_json(parse_line(R"({"n":4,"i":1,"j":4})")); });
    expect_domain_error([] { curve_from_json(parse_line(R"({"n":4,"i":3,"j":2})")); });
    expect_domain_error(
        [] { family_from_json(parse_line(R"({"n":4,"components":[{"i":1,"j":2,"mult":0}]})")); });
    expect_domain_error([] {
        family_from_json(parse_line(
            R"({"n":4,"components":[{"i":1,"j":2,"mult":1},{"i":2,"j":3,"mult":1}]})"));
    });
}
