#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pfe/enumeration.hpp"
#include "pfe/identities.hpp"
#include "pfe/oracle.hpp"
#include "support.hpp"

using namespace pfe;

namespace {

std::vector<Rational> ints(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (auto v : values)
        out.emplace_back(v);
    return out;
}

std::vector<Rational> coeffs(const TruncatedSeries& s)
{
    return {s.coefficients().begin(), s.coefficients().end()};
}

TruncatedSeries brute_power(const std::vector<Rational>& base, unsigned k, std::size_t N)
{
    std::vector<Rational> acc(N + 1, Rational(0));
    acc[0] = 1;
    for (unsigned i = 0; i < k; ++i)
        acc = support::convolve(acc, base, N);
    return TruncatedSeries(acc);
}

} // namespace

TEST_CASE("every registered identity passes at its default order")
{
    for (const auto& info : identity_catalog()) {
        CAPTURE(info.key);
        const auto report = verify(info.key, {}, info.default_order);
        CHECK(report.passed);
        CHECK(report.name == info.key);
        CHECK(report.order == info.default_order);
    }
    CHECK(identity_catalog().size() == 21);
}

TEST_CASE("identity parameters")
{
    VerifyParams p;
    for (long r : {1L, 2L, 5L, -7L}) {
        p.r = Rational(r);
        CHECK(verify("colored", p, 40).passed);
        CHECK(verify("lehmer_gen", p, 40).passed);
        CHECK(verify("ramanujan_gen", p, 40).passed);
        CHECK(verify("fibonacci_power", p, 40).passed);
    }
    p = {};
    p.r = make_rational(-5, 3);
    CHECK(verify("ramanujan_gen", p, 40).passed);
    CHECK(verify("lehmer_gen", p, 40).passed);

    p = {};
    for (unsigned m = 0; m <= 3; ++m) {
        p.m = m;
        CHECK(verify("moments", p, 60).passed);
    }
    p = {};
    for (long k = 1; k <= 10; ++k) {
        p.k = Rational(k);
        CHECK(verify("frequency_indicator", p, 60).passed);
    }
    p = {};
    p.r = make_rational(1, 3);
    p.s = make_rational(-2, 5);
    p.series = ints({1, 3, -1, 4});
    CHECK(verify("pr_ps", p, 20).passed);
    p.series = ints({2, 1});
    CHECK_THROWS_AS(verify("pr_ps", p, 20), std::domain_error);

    p = {};
    p.x = {Rational(3), make_rational(-1, 4)};
    CHECK(verify("newton_symmetric", p, 15).passed);

    p = {};
    p.m = 5;
    CHECK(verify("sin_truncated", p, 10).passed);
    CHECK(verify("gamma_truncated", p, 10).passed);
}

TEST_CASE("unknown keys and bad parameters")
{
    CHECK_THROWS_AS(verify("no_such_identity", {}, 10), std::domain_error);
    VerifyParams p;
    p.k = Rational(0);
    CHECK_THROWS_AS(verify("frequency_indicator", p, 10), std::domain_error);
    p = {};
    p.z = Rational(0);
    CHECK_THROWS_AS(verify("jtp_power_rec", p, 10), std::domain_error);
    CHECK_THROWS_AS(verify("euler_sigma", {}, 0), std::domain_error);
}

TEST_CASE("named series spot values")
{
    CHECK(coeffs(named_series(SeriesName::phi, 9)) == ints({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    CHECK(coeffs(named_series(SeriesName::psi, 10)) == ints({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(coeffs(named_series(SeriesName::pentagonal, 7)) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(coeffs(named_series(SeriesName::jacobi_cube, 6)) == ints({1, -3, 0, 5, 0, 0, -7}));
    CHECK(coeffs(named_series(SeriesName::fibonacci, 7)) == ints({1, 1, 2, 3, 5, 8, 13, 21}));
    CHECK(coeffs(named_series(SeriesName::partition, 10)) == ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    CHECK(coeffs(named_series(SeriesName::distinct, 8)) == ints({1, 1, 1, 2, 2, 3, 4, 5, 6}));

    NamedSeries spec;
    spec.name = SeriesName::eta_power;
    spec.r = -24;
    CHECK(coeffs(named_series(spec, 5)) == ints({1, -24, 252, -1472, 4830, -6048}));

    spec.name = SeriesName::exp;
    spec.a = 2;
    const auto e = named_series(spec, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(e[n] == make_rational(Integer(1L << n), factorial(static_cast<unsigned>(n))));

    spec.name = SeriesName::sin_normalized;
    spec.m = 3;
    // (1 - x)(1 - x/4)(1 - x/9)
    CHECK(coeffs(named_series(spec, 4)) ==
          std::vector<Rational>{Rational(1), make_rational(-49, 36), make_rational(14, 36), make_rational(-1, 36),
                                Rational(0)});

    CHECK(parse_series_name("gap2_partitions") == SeriesName::gap2_partitions);
    CHECK_FALSE(parse_series_name("nope"));
    for (auto n : all_series_names())
        CHECK(parse_series_name(to_string(n)) == n);
}

TEST_CASE("gap-2 series counts Rogers-Ramanujan partitions")
{
    const std::size_t N = 30;
    const auto s = named_series(SeriesName::gap2_partitions, N);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(s[n] == static_cast<unsigned long>(oracle::gap_partition_count(n, 2)));
}

TEST_CASE("theta series are squares and triangular numbers")
{
    const std::size_t N = 40;
    const auto phi = named_series(SeriesName::phi, N);
    const auto r2 = phi * phi;
    for (std::size_t n = 0; n <= N; ++n) {
        long count = 0;
        for (long a = -7; a <= 7; ++a)
            for (long b = -7; b <= 7; ++b)
                if (a * a + b * b == static_cast<long>(n))
                    ++count;
        CHECK(r2[n] == count);
    }
}

TEST_CASE("recurrence generators agree with series powers")
{
    const std::size_t N = 60;
    const auto partition = named_series(SeriesName::partition, N);
    for (const auto& r : {Rational(-24), Rational(1), Rational(7), make_rational(1, 6), make_rational(-5, 2)}) {
        const auto expected = partition.power(r);
        CHECK(eta_power_lehmer(r, N) == expected);
        CHECK(eta_power_ramanujan(r, N) == expected);
    }

    const auto phi = coeffs(named_series(SeriesName::phi, N));
    const auto psi = coeffs(named_series(SeriesName::psi, N));
    for (unsigned k = 0; k <= 8; ++k) {
        CHECK(squares_power(Rational(k), N) == brute_power(phi, k, N));
        CHECK(triangular_power(Rational(k), N) == brute_power(psi, k, N));
    }

    const auto fib = named_series(SeriesName::fibonacci, 30);
    CHECK(fibonacci_power_recurrence(Rational(1), 30) == fib);
    CHECK(fibonacci_power_recurrence(make_rational(3, 2), 30) == fib.power(make_rational(3, 2)));
}

TEST_CASE("tau from a 24-fold product")
{
    const std::size_t N = 30;
    const auto t = tau(N);
    const auto euler = support::euler_product(N);
    std::vector<Rational> base(euler.begin(), euler.end());
    const auto brute = brute_power(base, 24, N);
    for (std::size_t n = 1; n <= N; ++n)
        CHECK(Rational(t[n]) == brute[n - 1]);
    CHECK(t[2] == -24);
    CHECK(t[12] == -370944);
}

TEST_CASE("zeta values at even integers")
{
    const auto A = zeta_hat(10);
    CHECK(A[1] == make_rational(1, 6));
    CHECK(A[2] == make_rational(1, 90));
    CHECK(A[3] == make_rational(1, 945));
    CHECK(A[4] == make_rational(1, 9450));
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(A[n] == zeta_hat_bernoulli(n));
    CHECK_THROWS_AS(zeta_hat_bernoulli(0), std::domain_error);
}

TEST_CASE("reports locate the first mismatch")
{
    const auto report = compare_sides(
        "demo", 1, 10, [](std::size_t n) { return Rational(static_cast<long>(n)); },
        [](std::size_t n) { return Rational(n >= 7 ? 0L : static_cast<long>(n)); });
    CHECK_FALSE(report.passed);
    CHECK(report.first_failure == 7);
    CHECK(report.lhs == 7);
    CHECK(report.rhs == 0);
    CHECK(describe(report) == "demo: FAIL (order 10) at n = 7: 7 != 0");

    auto merged = compare_sides(
        "demo", 1, 10, [](std::size_t) { return Rational(0); }, [](std::size_t) { return Rational(0); });
    CHECK(describe(merged) == "demo: PASS (order 10)");
    merged.merge(report);
    CHECK_FALSE(merged.passed);
    CHECK(merged.first_failure == 7);
}
