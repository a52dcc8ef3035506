#include <doctest.h>

#include "multiwave/rational.hpp"

using namespace mw;

TEST_SUITE("rational") {
    TEST_CASE("normalization and arithmetic") {
        CHECK(Rat(2, 4) == Rat(1, 2));
        CHECK(Rat(-2, -4) == Rat(1, 2));
        CHECK(Rat(2, -4) == Rat(-1, 2));
        CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
        CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
        CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
        CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
        CHECK(Rat(1, 3) < Rat(1, 2));
        CHECK(Rat(-1, 3) < Rat(0));
        CHECK_THROWS_AS(Rat(1, 0), Error);
        CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
    }

    TEST_CASE("parse and print") {
        CHECK(Rat::parse("3/4") == Rat(3, 4));
        CHECK(Rat::parse("-6/8") == Rat(-3, 4));
        CHECK(Rat::parse("7") == Rat(7));
        CHECK(Rat(25, 13).str() == "25/13");
        CHECK(Rat(4, 2).str() == "2");
        CHECK_THROWS_AS(Rat::parse("x"), Error);
        CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    }

    TEST_CASE("exponents") {
        const Exponent q(Rat(6));
        CHECK(q.reciprocal() == Rat(1, 6));
        CHECK(Exponent::infinity().reciprocal() == Rat(0));
        CHECK(Exponent::parse("inf").inf);
        CHECK(Exponent::parse("30/19").value == Rat(30, 19));

        // Hoelder conjugates
        CHECK(Exponent(Rat(6)).conjugate().value == Rat(6, 5));
        CHECK(Exponent(Rat(1)).conjugate().inf);
        CHECK(Exponent::infinity().conjugate().value == Rat(1));
        CHECK(Exponent(Rat(2)).conjugate().value == Rat(2));
    }
}
