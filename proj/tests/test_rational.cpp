#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "hhcert/rational.hpp"

using hhcert::Rational;

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("25/11").str() == "25/11");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational::parse("4/2").is_integer());
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::domain_error);
    for (const char* bad : {"", "x", "1/", "/2", "1/-2", "1.5", "1//2", " 1", "--1"})
        CHECK_THROWS_AS((void)Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 4) - Rational(23, 96) == Rational(1, 96));
    CHECK(Rational(-3, 2) * Rational(2, 3) == Rational(-1));
    CHECK(Rational(3, 56) / Rational(1, 84) == Rational(9, 2));
    CHECK_THROWS_AS((void)(third / Rational(0)), std::domain_error);
    CHECK_THROWS_AS((void)Rational(1, 0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(abs(Rational(-2, 7)) == Rational(2, 7));
    CHECK(positive_part(Rational(-1)) == Rational(0));
    CHECK(min(Rational(1), Rational(2)) == Rational(1));
    CHECK(max(Rational(1), Rational(2)) == Rational(2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
    std::ostringstream os;
    os << Rational(-8, 3);
    CHECK(os.str() == "-8/3");
}
