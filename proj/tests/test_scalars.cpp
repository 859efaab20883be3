#include <doctest.h>

#include <random>

#include "hwlie/quadratic.hpp"
#include "hwlie/rational.hpp"
#include "hwlie/scalar.hpp"

using namespace hwlie;

namespace {

std::mt19937_64 rng(20259);

Rational random_rational() {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Scalar random_scalar() { return {random_rational(), random_rational()}; }

} // namespace

TEST_CASE("rational normalization") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(BigInt(0), BigInt(7)).denominator() == 1);

    // Re-normalizing a constructed value is the identity.
    for (int k = 0; k < 200; ++k) {
        Rational x = random_rational();
        CHECK(Rational(x.numerator(), x.denominator()) == x);
    }
}

TEST_CASE("rational arithmetic and printing") {
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(-7)).str() == "-7");
    CHECK(Rational(14, -6).str() == "-7/3");
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("scalar arithmetic matches hand values") {
    Scalar a{Rational(1, 2), Rational(1)};   // 1/2 + i
    Scalar b{Rational(1, 2), Rational(-1)};  // 1/2 - i
    CHECK(a * b == Scalar(Rational(5, 4)));

    Scalar x = random_scalar();
    CHECK(x * Scalar(1) == x);

    CHECK(Scalar(1) / Scalar::i() == -Scalar::i());
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("scalar field axioms on random triples") {
    for (int k = 0; k < 500; ++k) {
        Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Scalar(0));
        if (!x.is_zero()) CHECK(x * (Scalar(1) / x) == Scalar(1));
    }
}

TEST_CASE("scalar printing and parsing round-trip") {
    CHECK(Scalar(Rational(5, 4)).str() == "5/4");
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar::i().str() == "1*i");
    CHECK((-Scalar::i()).str() == "-1*i");
    CHECK(Scalar(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4*i");
    CHECK(Scalar(Rational(-2), Rational(1, 7)).str() == "-2+1/7*i");

    for (int k = 0; k < 200; ++k) {
        Scalar x = random_scalar();
        CHECK(parse_scalar(x.str()) == x);
    }
    CHECK(parse_scalar("i") == Scalar::i());
    CHECK(parse_scalar("-i") == -Scalar::i());
    CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);
}

TEST_CASE("quad_sign exact values") {
    CHECK(quad_sign(QuadInt(3, -2)) == +1);   // 9 > 8
    CHECK(quad_sign(QuadInt(0, 0)) == 0);
    CHECK(quad_sign(QuadInt(1, -1)) == -1);   // 1 < 2
    CHECK(quad_sign(QuadInt(-3, 2)) == -1);
    CHECK(quad_sign(QuadInt(7, -5)) == -1);   // 49 < 50
    CHECK(quad_sign(QuadInt(-7, 5)) == +1);
    CHECK(quad_sign(QuadInt(0, -4)) == -1);
    CHECK(quad_sign(QuadInt(11, 0)) == +1);
}

TEST_CASE("quad_sign properties") {
    std::uniform_int_distribution<long long> coeff(-60, 60);
    std::vector<QuadInt> positives;
    for (int k = 0; k < 800; ++k) {
        QuadInt v(coeff(rng), coeff(rng));
        CHECK(quad_sign(v) == -quad_sign(-v));
        if (quad_sign(v) == +1) positives.push_back(v);
    }
    for (size_t k = 0; k + 1 < positives.size(); k += 2)
        CHECK(quad_sign(positives[k] + positives[k + 1]) == +1);
}

TEST_CASE("quadratic field arithmetic") {
    QuadRat r2 = QuadRat::sqrt2();
    CHECK(r2 * r2 == QuadRat(2));
    QuadRat x{Rational(1), Rational(-1)};   // 1 - r2
    QuadRat inv = QuadRat(1) / x;           // -(1 + r2)
    CHECK(inv == QuadRat(Rational(-1), Rational(-1)));
    CHECK(x * inv == QuadRat(1));
    CHECK_THROWS_AS(QuadRat(1) / QuadRat(0), DivisionByZero);
}

TEST_CASE("quadratic printing and parsing") {
    CHECK(QuadInt(-3, 2).str() == "-3+2*r2");
    CHECK(QuadInt(1, 0).str() == "1");
    CHECK(QuadInt(0, -1).str() == "-1*r2");
    CHECK(QuadInt(0, 0).str() == "0");
    CHECK(parse_quadint("-3+2*r2") == QuadInt(-3, 2));
    CHECK(parse_quadint("r2") == QuadInt(0, 1));
    CHECK(parse_quadrat("1/2-3/4*r2") == QuadRat(Rational(1, 2), Rational(-3, 4)));
    CHECK(QuadRat(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4*r2");
    CHECK_THROWS_AS(parse_quadint("1/2"), ParseError);
}
