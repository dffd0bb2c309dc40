#include "doctest.h"

#include "cfk/gf2.hpp"
#include "cfk/intmath.hpp"
#include "cfk/rational.hpp"

using cfk::Gf2Matrix;
using cfk::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 4) + Rational(1, 4)) == Rational(1, 2));
    CHECK((Rational(1, 3) - Rational(1, 2)) == Rational(-1, 6));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(3, 2)) == Rational(1, 3));
    CHECK(-Rational(1, 4) == Rational(-1, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational formatting") {
    CHECK(Rational(1, 4).str() == "1/4");
    CHECK(Rational(-1, 4).str() == "-1/4");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(3, 2).is_positive_integer() == false);
    CHECK(Rational(4, 2).is_positive_integer() == true);
}

TEST_CASE("floor/ceil division") {
    CHECK(cfk::floor_div(7, 2) == 3);
    CHECK(cfk::floor_div(-7, 2) == -4);
    CHECK(cfk::ceil_div(7, 2) == 4);
    CHECK(cfk::ceil_div(-7, 2) == -3);
    CHECK(cfk::pos_mod(-3, 5) == 2);
    CHECK(cfk::mod_inverse(2, 5) == 3);
    CHECK(cfk::mod_inverse(3, 7) == 5);
}

TEST_CASE("gf2 rank") {
    Gf2Matrix m(3, 3);
    CHECK(m.rank() == 0);
    m.flip(0, 0);
    m.flip(1, 1);
    CHECK(m.rank() == 2);
    m.flip(2, 0);
    m.flip(2, 1);  // row2 = row0 + row1
    CHECK(m.rank() == 2);
    m.flip(2, 2);
    CHECK(m.rank() == 3);
}

TEST_CASE("gf2 rank across word boundaries") {
    Gf2Matrix m(2, 130);
    m.flip(0, 0);
    m.flip(0, 129);
    m.flip(1, 0);
    m.flip(1, 129);  // equal rows
    CHECK(m.rank() == 1);
    m.flip(1, 64);
    CHECK(m.rank() == 2);
}
