#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "planarlab/exprio.hpp"
#include "planarlab/presets.hpp"
#include "test_util.hpp"

using namespace planarlab;
using testutil::random_poly2;

TEST_CASE("grammar basics") {
    CHECK(parse_poly2("y + x*(x^2+y^2-1)") == presets::example1_x().p);
    CHECK(parse_poly2("0").is_zero());
    CHECK(parse_poly2("  x ^ 2\t+ y ") == parse_poly2("x^2+y"));
    CHECK(parse_poly2("2/3*x - 1/3*x") == parse_poly2("1/3*x"));
    CHECK(parse_poly2("-(x-y)") == parse_poly2("y-x"));
    CHECK(parse_poly2("(x+y)^3") ==
          parse_poly2("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(parse_poly4("z*x + w*y").coefficient(Mono4(1, 0, 1, 0)) == 1);
}

TEST_CASE("parse errors carry kind and position") {
    CHECK_THROWS_AS(parse_poly2("x^-1"), ParseError);
    try {
        parse_poly2("x^-1");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::NegativeExponent);
    }
    try {
        parse_poly2("y + z");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::UnknownVariable);
        CHECK(e.pos == 4);
    }
    try {
        parse_poly2("x +");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::Syntax);
    }
    CHECK_THROWS_AS(parse_poly2("x y"), ParseError);   // no implicit product
    CHECK_THROWS_AS(parse_poly2("x^(2)"), ParseError); // exponent is a literal
    CHECK_THROWS_AS(parse_poly2(""), ParseError);
}

TEST_CASE("field parsing") {
    CHECK(parse_field("y", "-x") == presets::rotation());
    CHECK(parse_field("x", "y") == presets::dilation());
    try {
        parse_field("y + z", "-x");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("P component") != std::string::npos);
    }
    try {
        parse_field("y", "-x + w");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("Q component") != std::string::npos);
    }
}

TEST_CASE("canonical formatting") {
    CHECK(format_poly(Poly2{}) == "0");
    CHECK(format_poly(presets::example1_x().p) == "x^3 + x*y^2 - x + y");
    CHECK(format_poly(parse_poly2("1/3*x^3")) == "1/3*x^3");
    CHECK(format_poly(parse_poly2("-x - 1")) == "-x - 1");
    CHECK(format_field(presets::rotation()) == "(y, -x)");
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937 rng(20250823);
    std::uniform_int_distribution<long> num(-2147483647L, 2147483647L);
    std::uniform_int_distribution<int> den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        Poly2 p = random_poly2(rng, 6);
        // widen a coefficient to exercise 32-bit numerators
        p.add_term(Mono2(1, 1), Rat(num(rng), den(rng)));
        CHECK(parse_poly2(format_poly(p)) == p);
    }
}

TEST_CASE("double formatting round trips") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double v = std::exp(u(rng) * 1e-5) * u(rng);
        CHECK(std::strtod(format_double17(v).c_str(), nullptr) == v);
    }
    CHECK(std::strtod(format_double17(3.141592653589793).c_str(), nullptr) ==
          3.141592653589793);
}

TEST_CASE("report schema") {
    const auto rep = make_report("bracket", {{"x", "y"}}, {{"ok", true}});
    CHECK(rep.at("command") == "bracket");
    CHECK(rep.at("version") == kReportVersion);
    CHECK(rep.contains("inputs"));
    CHECK(rep.contains("result"));
    CHECK(rep.size() == 4);
}
