#include "oracles.hpp"
#include "phidyn/io.hpp"

#include <doctest.h>

using namespace phidyn;
using oracle::q;

TEST_SUITE("io") {

TEST_CASE("extended rationals") {
    CHECK(parse_extended_rational("3/5") == ExtendedRational(3, 5));
    CHECK(parse_extended_rational(" 6/4 ") == ExtendedRational(3, 2));
    CHECK(parse_extended_rational("1/0").is_infinite());
    CHECK(parse_extended_rational("inf").is_infinite());
    CHECK(parse_extended_rational("\xE2\x88\x9E").is_infinite());
    CHECK(parse_extended_rational("7") == ExtendedRational(7, 1));
    CHECK_THROWS_AS(parse_extended_rational("0/0"), ParseError);
    CHECK_THROWS_AS(parse_extended_rational("-1/2"), ParseError);
    CHECK_THROWS_AS(parse_extended_rational("1/2x"), ParseError);
}

TEST_CASE("decimals convert exactly") {
    CHECK(parse_rational("12.375") == q(99, 8));
    CHECK(parse_rational("0.1") == q(1, 10));
    CHECK(parse_point("0.6") == ExtendedRational(3, 5));
    CHECK_THROWS_AS(parse_rational("1."), ParseError);
}

TEST_CASE("surds") {
    const QuadraticSurd z(BigInt(-1), BigInt(1), BigInt(5), BigInt(2));
    CHECK(parse_surd("(-1+1\xE2\x88\x9A" "5)/2") == z);
    CHECK(parse_surd("(\xE2\x88\x92" "1+\xE2\x88\x9A" "5)/2") == z);
    CHECK(parse_surd("(-1+sqrt(5))/2") == z);
    CHECK(parse_surd("(-1+1*sqrt(5))/2") == z);
    CHECK(parse_surd("(3-2\xE2\x88\x9A" "2)") == QuadraticSurd(BigInt(3), BigInt(-2), BigInt(2), BigInt(1)));
    CHECK(parse_surd("\xE2\x88\x9A" "2/2") == QuadraticSurd(BigInt(0), BigInt(1), BigInt(2), BigInt(2)));
    CHECK(parse_surd("sqrt(8)") == QuadraticSurd(BigInt(0), BigInt(2), BigInt(2), BigInt(1)));
    CHECK(std::holds_alternative<ExtendedRational>(parse_point("(2+sqrt(4))/2")));
    CHECK_THROWS_AS(parse_point("(-3+sqrt(5))/2"), ParseError);
    CHECK_THROWS_AS(parse_surd("(1+sqrt(5)/2"), ParseError);
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_extended_rational("12/ab");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
    try {
        parse_code("01(1x)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("codes") {
    CHECK(parse_code("1(0)").str() == "1(0)");
    CHECK(parse_code("(0)").str() == "(0)");
    CHECK(parse_code("0\xCC\x85").str() == "(0)");
    CHECK(parse_code("01\xCC\x84").str() == "(01)");
    CHECK(parse_code("0(10)").str() == "(01)");
    CHECK_THROWS_AS(parse_code("01"), ParseError);
    CHECK_THROWS_AS(parse_code("0()"), ParseError);
}

TEST_CASE("intervals and k ranges") {
    CHECK(parse_interval("0/1..1/3") == FareyInterval(ExtendedRational(0, 1), ExtendedRational(1, 3)));
    CHECK(parse_interval("2/1..1/0").hi().is_infinite());
    CHECK_THROWS_AS(parse_interval("1/1..1/2"), ParseError);
    CHECK(parse_k_range("5..7") == std::pair<unsigned, unsigned>{5, 7});
    CHECK(parse_k_range("6") == std::pair<unsigned, unsigned>{6, 6});
    CHECK_THROWS_AS(parse_k_range("7..5"), ParseError);
}

TEST_CASE("fraction strings") {
    CHECK(fraction_string(Rational(3)) == "3/1");
    CHECK(fraction_string(q(-1, 2)) == "-1/2");
}

}  // TEST_SUITE
