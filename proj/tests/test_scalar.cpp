#include <doctest.h>

#include "arr/scalar.hpp"
#include "test_support.hpp"

#include <random>

using namespace arr;

TEST_CASE("parse examples") {
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK(Scalar::parse("-3/4") == Scalar(Rat(-3, 4)));
    CHECK(Scalar::parse("2/r") == Scalar(2) / Scalar::variable());
    CHECK(Scalar::parse("(r+1)/(r+1)") == Scalar(1));
    CHECK(Scalar::parse("2r") == Scalar(2) * Scalar::variable());
    CHECK(Scalar::parse("1/r") == Scalar::variable().inverse());
    CHECK(Scalar::parse("(2*r+1)/(r-3)") ==
          (Scalar(2) * Scalar::variable() + Scalar(1)) / (Scalar::variable() - Scalar(3)));
    CHECK(Scalar::parse("r^2") == Scalar::variable() * Scalar::variable());
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("1/(r-r)"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("2+"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
}

TEST_CASE("print-parse round trip on random canonical scalars") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        Scalar s = random_scalar(rng);
        CAPTURE(s.str());
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("is_positive_integer") {
    CHECK(Scalar(3).is_positive_integer());
    CHECK_FALSE(Scalar(Rat(3, 2)).is_positive_integer());
    CHECK_FALSE(Scalar::variable().is_positive_integer());
    CHECK_FALSE(Scalar(0).is_positive_integer());
    CHECK_FALSE(Scalar(-2).is_positive_integer());
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(97);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK((a / a) == Scalar(1));
        }
    }
}

TEST_CASE("canonicalization collapses constant fractions") {
    Scalar s = Scalar::fraction(Poly(Rat(6)), Poly(Rat(4)));
    CHECK(s.is_rational());
    CHECK(s == Scalar(Rat(3, 2)));
    // (r^2-1)/(r-1) = r+1
    Poly num = Poly::variable() * Poly::variable() - Poly(Rat(1));
    Poly den = Poly::variable() - Poly(Rat(1));
    Scalar t = Scalar::fraction(num, den);
    CHECK(t == Scalar::variable() + Scalar(1));
    CHECK(t.str() == "r + 1");
}

TEST_CASE("eval specializes r") {
    Scalar s = Scalar::parse("(2*r+1)/(r-3)");
    CHECK(s.eval(Rat(4)) == Rat(9));
    CHECK_THROWS_AS(s.eval(Rat(3)), std::domain_error);
}
