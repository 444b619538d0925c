#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pfe/identities.hpp"
#include "pfe/roots.hpp"
#include "support.hpp"

using namespace pfe;

namespace {

std::vector<Rational> four_series(std::size_t N)
{
    std::vector<Rational> P(N + 1, Rational(4));
    P[0] = 1;
    return P;
}

} // namespace

TEST_CASE("integrality of the partition numbers and of a half power")
{
    const std::size_t N = 30;
    const auto partition = named_series(SeriesName::partition, N);
    const auto result = integrality_check(partition.coefficients(), N);
    CHECK(result.coefficients_integral);
    CHECK(result.exponents_integral);
    for (std::size_t k = 1; k <= N; ++k)
        CHECK(result.b[k] == 1);

    const auto half = TruncatedSeries({Rational(1), Rational(-1)}, N).power(make_rational(-1, 2));
    const auto h = integrality_check(half.coefficients(), N);
    CHECK(h.b[1] == make_rational(1, 2));
    CHECK_FALSE(h.coefficients_integral);
    CHECK_FALSE(h.exponents_integral);
    CHECK(h.agree());
}

TEST_CASE("the series 1, 4, 4, 4, ...")
{
    const std::size_t N = 20;
    const auto P = four_series(N);
    const auto result = integrality_check(P, N);
    CHECK(result.b[1] == 4);
    CHECK(result.b[2] == -6);
    CHECK(result.agree());

    const auto report = prime_power_divisibility(P, 2, 2, N);
    CHECK(report.hypothesis_holds());
    CHECK(report.passed());
    REQUIRE(report.verdicts.size() == N);
    // b_2 = -6 meets the weaker bound r - 1 = 1 but not r = 2.
    CHECK(report.verdicts[1].required == 1);
    CHECK(report.verdicts[1].valuation == PadicValuation::finite(1));
    CHECK(report.verdicts[0].required == 2);
}

TEST_CASE("divisibility hypothesis failures are reported, not thrown")
{
    const std::size_t N = 10;
    auto P = four_series(N);
    P[3] = 6;
    const auto report = prime_power_divisibility(P, 2, 2, N);
    CHECK_FALSE(report.hypothesis_holds());
    CHECK(report.hypothesis_failure == 3);
    CHECK_FALSE(report.passed());

    std::vector<Rational> trivial(N + 1, Rational(0));
    trivial[0] = 1;
    CHECK(prime_power_divisibility(trivial, 7, 4, N).passed());
    CHECK_THROWS_AS(prime_power_divisibility(P, 4, 2, N), std::invalid_argument);
}

TEST_CASE("exponent integrality tracks coefficient integrality on random series")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> order(1, 40);
    for (int trial = 0; trial < 40; ++trial) {
        const auto N = order(rng);
        std::vector<Rational> P(N + 1);
        P[0] = 1;
        const bool rational = trial % 2 == 1;
        for (std::size_t n = 1; n <= N; ++n)
            P[n] = rational ? support::random_rational(rng, 20, 3) : support::random_rational(rng, 20, 1);
        CHECK(integrality_check(P, N).agree());
    }
}

TEST_CASE("prime power divisibility on random series")
{
    std::mt19937_64 rng(43);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned r = 1; r <= 4; ++r) {
            Integer modulus;
            mpz_ui_pow_ui(modulus.get_mpz_t(), p, r);
            const auto P = random_divisible_series(rng, modulus, 30, 10);
            const auto report = prime_power_divisibility(P, p, r, 30);
            CHECK(report.passed());
        }
    }
}

TEST_CASE("roots of series divisible by m^t")
{
    // (1 + 2q)^2 = 1 + 4q + 4q^2
    const std::vector<Rational> square{Rational(1), Rational(4), Rational(4), Rational(0), Rational(0)};
    const auto root = root_integrality(square, 2, 2, 1, 4);
    CHECK(root.all_integral);
    CHECK(root.root == TruncatedSeries({Rational(1), Rational(2)}, 4));

    const auto same = root_integrality(square, 2, 2, 0, 4);
    CHECK(same.root == TruncatedSeries(square));

    std::mt19937_64 rng(47);
    const auto P = random_divisible_series(rng, 8, 25, 15);
    for (unsigned s = 0; s < 3; ++s) {
        const auto r = root_integrality(P, 2, 3, s, 25);
        CHECK(r.all_integral);
        Integer ms;
        mpz_ui_pow_ui(ms.get_mpz_t(), 2, s);
        CHECK(r.root.power(Rational(ms)) == TruncatedSeries(P));
    }
}

TEST_CASE("root hypothesis violations name the index")
{
    std::vector<Rational> P{Rational(1), Rational(4), Rational(4), Rational(2)};
    try {
        root_integrality(P, 2, 2, 1, 3);
        FAIL("expected std::invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("P(3)") != std::string::npos);
    }
    CHECK_THROWS_AS(root_integrality(P, 2, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(root_integrality(P, 1, 2, 1, 2), std::invalid_argument);
}
