#include <doctest.h>

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"
#include "lll/rational.hpp"

#include <cstdint>
#include <vector>

using namespace lll;

TEST_CASE("make_rational reduces and normalizes sign") {
    CHECK(make_rational(3, 12) == Rational(1, 4));
    CHECK(make_rational(-3, 12) == Rational(-1, 4));
    CHECK(make_rational(3, -12) == Rational(-1, 4));
    CHECK(make_rational(-3, -12) == Rational(1, 4));
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("is_probability is the closed unit interval") {
    CHECK(is_probability(Rational(0)));
    CHECK(is_probability(Rational(1)));
    CHECK(is_probability(Rational(1, 2)));
    CHECK_FALSE(is_probability(Rational(-1, 1000)));
    CHECK_FALSE(is_probability(Rational(1001, 1000)));
}

TEST_CASE("to_fraction_string always renders a denominator") {
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(Rational(3, 4)) == "3/4");
    CHECK(to_fraction_string(Rational(-5, 10)) == "-1/2");
    CHECK(to_fraction_string(Rational(7)) == "7/1");
}

TEST_CASE("parse_rational accepts integers, fractions, and exact decimals") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("0.99") == Rational(99, 100));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("0.125") == Rational(1, 8));

    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational("/2"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), DomainError);
    CHECK_THROWS_AS(parse_rational("1e3"), DomainError);
}

TEST_CASE("parse and render round-trip") {
    for (const char* text : {"0/1", "3/4", "-1/2", "22/7", "13717421/109739369"}) {
        CHECK(to_fraction_string(parse_rational(text)) == text);
    }
}

TEST_CASE("to_double_approx on exactly representable values") {
    CHECK(to_double_approx(Rational(1, 4)) == 0.25);
    CHECK(to_double_approx(Rational(-3, 2)) == -1.5);
    CHECK(to_double_approx(Rational(0)) == 0.0);
}

TEST_CASE("binomial matches the Pascal-triangle recurrence") {
    // Independent oracle: build the triangle by addition only.
    std::vector<std::vector<BigInt>> pascal(21);
    for (std::size_t n = 0; n <= 20; ++n) {
        pascal[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (std::uint64_t n = 0; n <= 20; ++n)
        for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);

    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("factorial and falling_factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));

    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(5, 5) == 120);
    CHECK(falling_factorial(3, 5) == 0);

    // FF(n, k) = C(n, k) * k!
    for (std::uint64_t n = 0; n <= 12; ++n)
        for (std::uint64_t k = 0; k <= n; ++k)
            CHECK(falling_factorial(n, k) == binomial(n, k) * factorial(k));
}

TEST_CASE("injection_count is the falling factorial") {
    CHECK(injection_count(2, 4) == 12);
    CHECK(injection_count(3, 5) == 60);
    CHECK(injection_count(5, 5) == 120);
    CHECK(injection_count(0, 5) == 1);
    CHECK(injection_count(6, 5) == 0);
}
