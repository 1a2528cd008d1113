#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "liftkit/errors.hpp"
#include "liftkit/fixtures.hpp"
#include "liftkit/io.hpp"

using namespace liftkit;
namespace io = liftkit::io;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
    testgen::Gen g;
    for (int i = 0; i < 500; ++i) {
        LaurentPoly f = g.poly(6);
        CHECK(io::poly_from_json(io::poly_to_json(f)) == f);
    }
    // canonical documents re-serialize bit-exactly
    json doc = {{"lo", -1}, {"c", {"1/2", "0", "-1/2+1/3*w2"}}};
    CHECK(io::poly_to_json(io::poly_from_json(doc)) == doc);
    // zero polynomial
    CHECK(io::poly_from_json(json{{"lo", 3}, {"c", json::array()}}).is_zero());
}

TEST_CASE("polynomial parse errors") {
    CHECK_THROWS_AS(io::poly_from_json(json::array()), ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json{{"c", json::array()}}), ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json{{"lo", 0}, {"c", {"bogus"}}}), ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json{{"lo", "x"}, {"c", json::array()}}), ParseError);
}

TEST_CASE("matrix round trip and named constants") {
    CHECK(io::matrix_from_json(json("identity")) == PolyMatrix::identity());
    CHECK(io::matrix_from_json(json("haar")) == PolyMatrix::haar());
    CHECK(io::matrix_from_json(json("lazy-causal")) == PolyMatrix::lazy_causal());
    CHECK_THROWS_AS(io::matrix_from_json(json("nope")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(json::array({1, 2, 3})), ParseError);

    testgen::Gen g;
    for (int i = 0; i < 200; ++i) {
        PolyMatrix m(g.poly(4), g.poly(4), g.poly(4), g.poly(4));
        CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    }
}

TEST_CASE("cascade round trip") {
    testgen::Gen g;
    for (int i = 0; i < 200; ++i) {
        Cascade c = g.sw_cascade();
        json doc = io::cascade_to_json(c);
        Cascade back = io::cascade_from_json(doc);
        CHECK(back.gain == c.gain);
        CHECK(back.steps == c.steps);
        CHECK(back.base == c.base);
        CHECK(io::cascade_to_json(back) == doc);  // serialize(parse(doc)) = doc
    }
    // fixture with non-identity base
    json doc = io::cascade_to_json(fixtures::cdf75().rhs);
    CHECK(product(io::cascade_from_json(doc)) == fixtures::cdf75().lhs);
    // version guard and gain guard
    CHECK_THROWS_AS(io::cascade_from_json(json{{"version", "2"},
                                               {"gain", "1"},
                                               {"steps", json::array()},
                                               {"base", "identity"}}),
                    ParseError);
    CHECK_THROWS_AS(io::cascade_from_json(json{{"gain", "0"},
                                               {"steps", json::array()},
                                               {"base", "identity"}}),
                    ParseError);
    CHECK_THROWS_AS(io::cascade_from_json(json{{"gain", "1"},
                                               {"steps", {{{"m", 2}, {"s", {{"lo", 0}, {"c", {"1"}}}}}}},
                                               {"base", "identity"}}),
                    ParseError);
}

TEST_CASE("structure round trip") {
    for (const char* name : {"ws", "ws-reversible", "hs", "hs-reversible", "elasf"}) {
        GroupLiftingStructure s = io::structure_from_json(json(name));
        CHECK(s.name == name);
        GroupLiftingStructure back = io::structure_from_json(io::structure_to_json(s));
        CHECK(back.gain_group == s.gain_group);
        CHECK(back.upper == s.upper);
        CHECK(back.lower == s.lower);
        CHECK(back.bases == s.bases);
    }
    CHECK_THROWS_AS(io::structure_from_json(json("bogus")), ParseError);
    json custom = {{"gain_group", "full"},
                   {"upper", {{"symmetry", "unconstrained"}, {"ring", "field"}}},
                   {"lower", {{"symmetry", "wa"}, {"ring", "dyadic"}}},
                   {"bases", "haar-only"}};
    GroupLiftingStructure s = io::structure_from_json(custom);
    CHECK(s.upper.symmetry == Symmetry::Unconstrained);
    CHECK(s.lower.ring == Ring::Dyadic);
    CHECK(s.bases == BaseSetKind::HaarOnly);
}

TEST_CASE("json text parsing") {
    CHECK(io::parse_json_text("{\"a\":1}")["a"] == 1);
    CHECK_THROWS_AS(io::parse_json_text("{oops"), ParseError);
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/path.json"), ParseError);
}
