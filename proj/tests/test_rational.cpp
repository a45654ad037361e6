#include "doctest.h"

#include <random>
#include <stdexcept>

#include "adversolve/bigint.hpp"
#include "adversolve/rational.hpp"

using adversolve::BigInt;
using adversolve::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(-6, 8) == Rational(-3, 4));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(0, 7) == Rational(0));

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));

    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(6, 3).floor() == 2);
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational(35).to_string() == "35");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("rational overflow is detected") {
    Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("bigint matches int64 arithmetic on small values") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int i = 0; i < 500; ++i) {
        std::int64_t a = dist(rng);
        std::int64_t b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        CHECK(BigInt(a).compare(BigInt(b)) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("bigint handles large powers") {
    // 2^200 computed independently of BigInt::pow by repeated doubling.
    BigInt doubled(1);
    for (int i = 0; i < 200; ++i) doubled = doubled + doubled;
    CHECK(BigInt::pow(BigInt(2), 200) == doubled);
    CHECK(BigInt::pow(BigInt(10), 30).to_string() == "1" + std::string(30, '0'));
    CHECK(BigInt::pow(BigInt(-3), 3).to_string() == "-27");
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt::pow(BigInt(2), 30).to_double() == doctest::Approx(1073741824.0));
}
