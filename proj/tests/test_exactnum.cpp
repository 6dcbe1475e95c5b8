#include <doctest.h>

#include "qf/exactnum.hpp"
#include "support.hpp"

using namespace qf;

TEST_SUITE("exactnum") {

TEST_CASE("normalize reduces to lowest terms with positive denominator") {
    Rational r = normalize(Integer(6), Integer(-4));
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);

    Rational zero = normalize(Integer(0), Integer(7));
    CHECK(zero.get_num() == 0);
    CHECK(zero.get_den() == 1);

    // gcd oracle: 41*49*31 / 12^3 is already in lowest terms.
    Integer num = Integer(41) * 49 * 31;
    Integer den = Integer(12) * 12 * 12;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    CHECK(g == 1);
    Rational big = normalize(num, den);
    CHECK(big.get_num() == 62279);
    CHECK(big.get_den() == 1728);
}

TEST_CASE("normalize rejects a zero denominator") {
    CHECK_THROWS_WITH_AS(normalize(Integer(1), Integer(0)), "division by zero",
                         DomainError);
}

TEST_CASE("normalize is idempotent") {
    test::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Integer num = rng.integer(128);
        Integer den = rng.integer(128);
        if (den == 0) {
            continue;
        }
        Rational once = normalize(num, den);
        Rational twice = normalize(once.get_num(), once.get_den());
        CHECK(once.get_num() == twice.get_num());
        CHECK(once.get_den() == twice.get_den());
    }
}

TEST_CASE("exact_sqrt detects rational squares") {
    // Multiplication oracle for the expected root.
    CHECK(Integer(49) * Integer(49) == Integer(2401));
    CHECK(exact_sqrt(Rational(2401)) == Rational(49));
    CHECK(exact_sqrt(Rational(1)) == Rational(1));
    CHECK(!exact_sqrt(Rational(2)).has_value());
    CHECK(!exact_sqrt(normalize(Integer(4), Integer(3))).has_value());
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(exact_sqrt(Rational(-4)), DomainError);
}

TEST_CASE("exact_fourth_root") {
    CHECK(exact_fourth_root(Rational(16)) == Rational(2));
    CHECK(exact_fourth_root(normalize(Integer(625), Integer(16))) ==
          normalize(Integer(5), Integer(2)));
    CHECK(!exact_fourth_root(Rational(80)).has_value());
    CHECK(!exact_fourth_root(Rational(-16)).has_value());
    CHECK(exact_fourth_root(Rational(0)) == Rational(0));
}

TEST_CASE("roots invert powers on random rationals") {
    test::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Rational r = rng.rational(96);
        CHECK(exact_sqrt(r * r) == abs(r));
        CHECK(exact_fourth_root(pow4(r)) == abs(r));
    }
}

TEST_CASE("arithmetic is exact on random big operands") {
    test::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational(256);
        Rational b = rng.nonzero_rational(256);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("string round trips") {
    CHECK(to_string(Integer(-31)) == "-31");
    CHECK(to_string(Rational(7)) == "7"); // denominator omitted when 1
    CHECK(to_string(normalize(Integer(62279), Integer(1728))) == "62279/1728");
    CHECK(parse_integer("-31") == Integer(-31));
    CHECK(parse_rational("62279/1728") == normalize(Integer(62279), Integer(1728)));
    CHECK(parse_rational("-3/9") == normalize(Integer(-1), Integer(3)));
    CHECK(parse_rational("12") == Rational(12));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_integer("1.5"), DomainError);

    test::Rng rng;
    for (int i = 0; i < 50; ++i) {
        Rational r = rng.rational(200);
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("pow_int matches repeated multiplication") {
    test::Rng rng;
    for (int i = 0; i < 25; ++i) {
        Rational r = rng.rational(64);
        Rational acc(1);
        for (int k = 0; k < 7; ++k) {
            acc *= r;
        }
        CHECK(pow_int(r, 7) == acc);
        CHECK(pow4(r) == pow_int(r, 4));
    }
}

} // TEST_SUITE
