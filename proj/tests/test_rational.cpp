#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "motivic/rational.hpp"

using namespace motivic;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r = make_rational(6, -8);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 4);
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}

TEST_CASE("rational parsing accepts p and p/q only") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_rational("0") == 0);
    CHECK(rational_to_string(parse_rational("4/2")) == "2");
    CHECK(rational_to_string(make_rational(-3, 4)) == "-3/4");
    for (const char* bad : {"", "1/0", "1.5", "2/", "/3", "a", "1e3", "+2",
                            " 1", "3/-4", "1/2/3"})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("round trip through strings is exact") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long num = static_cast<long>(rng() % 20001) - 10000;
        const long den = static_cast<long>(rng() % 999) + 1;
        const Rational r = make_rational(num, den);
        CHECK(parse_rational(rational_to_string(r)) == r);
    }
}
