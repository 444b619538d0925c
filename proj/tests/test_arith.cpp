#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pfe/arith.hpp"
#include "support.hpp"

using namespace pfe;

TEST_CASE("parse_rational accepts integers and fractions")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-24") == -24);
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational(" -1/2 ") == make_rational(-1, 2));
    CHECK(parse_rational("123456789012345678901234567890") == Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed text")
{
    for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.5", "1//2", "--1", "2 3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string and integer conversion")
{
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(42)) == "42");
    CHECK(is_integer(Rational(5)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK(to_integer(Rational(-8)) == -8);
    CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::domain_error);
}

TEST_CASE("pow handles negative exponents")
{
    CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pow(Rational(0), 0) == 1);
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("is_prime and divisors agree with trial division")
{
    for (std::uint64_t n = 1; n <= 600; ++n) {
        std::vector<std::uint64_t> expected;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                expected.push_back(d);
        CHECK(divisors(n) == expected);
        CHECK(is_prime(n) == (expected.size() == 2));
    }
    CHECK_FALSE(is_prime(0));
    CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("mobius values and the divisor sum of mu")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        int total = 0;
        for (auto d : divisors(n))
            total += mobius(d);
        CHECK(total == (n == 1 ? 1 : 0));
    }
    CHECK_THROWS_AS(mobius(0), std::domain_error);
}

TEST_CASE("sigma matches direct summation")
{
    for (unsigned m = 0; m <= 3; ++m)
        for (std::uint64_t n = 1; n <= 300; ++n)
            CHECK(sigma(m, n) == support::naive_sigma(m, n));
    CHECK_THROWS_AS(sigma(1, 0), std::domain_error);
}

TEST_CASE("sigma_odd_even splits sigma_1")
{
    CHECK(sigma_odd_even(12).odd == 4);
    CHECK(sigma_odd_even(12).even == 24);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto split = sigma_odd_even(n);
        CHECK(split.odd + split.even == sigma(1, n));
    }
}

TEST_CASE("mobius_inversion inverts divisor_weighted_sum")
{
    std::mt19937_64 rng(11);
    const std::size_t N = 80;
    Sequence b(N + 1, Rational(0));
    for (std::size_t k = 1; k <= N; ++k)
        b[k] = support::random_rational(rng, 50, 9);
    const auto g = divisor_weighted_sum(b, N);
    CHECK(mobius_inversion(g, N) == b);

    // g = sigma_1 comes from b = 1.
    Sequence sig(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n)
        sig[n] = sigma(1, n);
    const auto ones = mobius_inversion(sig, N);
    for (std::size_t k = 1; k <= N; ++k)
        CHECK(ones[k] == 1);
    CHECK_THROWS_AS(mobius_inversion(std::span(sig).first(3), N), std::invalid_argument);
}

TEST_CASE("factorials, binomials and rising factorials")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(rising_factorial(Rational(3), 0) == 1);
    CHECK(rising_factorial(Rational(3), 4) == 3 * 4 * 5 * 6);
    CHECK(rising_factorial(make_rational(1, 2), 3) == make_rational(15, 8));
    CHECK(rising_factorial(Rational(-2), 3) == 0);
}

TEST_CASE("pentagonal_sign is the expansion of the Euler product")
{
    const std::size_t N = 400;
    const auto product = support::euler_product(N);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(pentagonal_sign(n) == product[n]);
    CHECK(pentagonal(1) == 1);
    CHECK(pentagonal(-1) == 2);
    CHECK(pentagonal(2) == 5);
    CHECK(pentagonal(-2) == 7);
    CHECK(triangular(4) == 10);
}

TEST_CASE("p-adic valuation")
{
    CHECK(padic_valuation(Rational(12), 2) == PadicValuation::finite(2));
    CHECK(padic_valuation(make_rational(5, 9), 3) == PadicValuation::finite(-2));
    CHECK(padic_valuation(Rational(7), 5) == PadicValuation::finite(0));
    CHECK(padic_valuation(Rational(0), 5).is_infinite());
    CHECK(padic_valuation(Integer(250), 5) == PadicValuation::finite(3));
    CHECK(padic_valuation(Rational(0), 5).at_least(1000));
    CHECK_FALSE(padic_valuation(make_rational(1, 5), 5).at_least(0));
    CHECK(to_string(PadicValuation::infinity()) == "inf");
    CHECK_THROWS_AS(padic_valuation(Rational(4), 4), std::domain_error);
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    CHECK(bernoulli(20) == make_rational(-174611, 330));
}
