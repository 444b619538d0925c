#include "pfe/roots.hpp"

#include <stdexcept>
#include <string>

#include "pfe/enumeration.hpp"

namespace pfe {

namespace {

void require_unit_constant(std::span<const Rational> P, std::size_t N, const char* who)
{
    if (P.size() < N + 1)
        throw std::invalid_argument(std::string(who) + ": P must be defined on 0..N");
    if (P[0] != 1)
        throw std::invalid_argument(std::string(who) + ": P(0) must be 1");
}

} // namespace

IntegralityResult integrality_check(std::span<const Rational> P, std::size_t N)
{
    require_unit_constant(P, N, "integrality_check");
    IntegralityResult out;
    out.b = series_to_pfe(P, N).b;
    for (std::size_t n = 1; n <= N; ++n) {
        out.coefficients_integral = out.coefficients_integral && is_integer(P[n]);
        out.exponents_integral = out.exponents_integral && is_integer(out.b[n]);
    }
    return out;
}

DivisibilityReport prime_power_divisibility(std::span<const Rational> P, std::uint64_t p, unsigned r,
                                            std::size_t N)
{
    require_unit_constant(P, N, "prime_power_divisibility");
    if (!is_prime(p))
        throw std::invalid_argument("prime_power_divisibility: p must be prime");
    if (r == 0)
        throw std::invalid_argument("prime_power_divisibility: r must be positive");

    DivisibilityReport report;
    report.p = p;
    report.r = r;
    report.order = N;
    for (std::size_t n = 1; n <= N; ++n) {
        if (!padic_valuation(P[n], p).at_least(r)) {
            report.hypothesis_failure = n;
            return report;
        }
    }

    const auto b = series_to_pfe(P, N).b;
    for (std::size_t m = 1; m <= N; ++m) {
        const long required = m % p == 0 ? static_cast<long>(r) - 1 : static_cast<long>(r);
        const auto v = padic_valuation(b[m], p);
        const bool holds = v.at_least(required);
        report.verdicts.push_back({m, required, v, holds});
        if (!holds && !report.counterexample)
            report.counterexample = m;
    }
    return report;
}

RootResult root_integrality(std::span<const Rational> P, const Integer& m, unsigned t, unsigned s, std::size_t N)
{
    require_unit_constant(P, N, "root_integrality");
    if (m < 2)
        throw std::invalid_argument("root_integrality: m must be at least 2");
    if (t == 0 || s >= t)
        throw std::invalid_argument("root_integrality: need 0 <= s < t");

    Integer mt;
    mpz_pow_ui(mt.get_mpz_t(), m.get_mpz_t(), t);
    for (std::size_t n = 1; n <= N; ++n) {
        const Rational q = P[n] / Rational(mt);
        if (!is_integer(q))
            throw std::invalid_argument("root_integrality: m^t does not divide P(" + std::to_string(n) + ")");
    }

    Integer ms;
    mpz_pow_ui(ms.get_mpz_t(), m.get_mpz_t(), s);
    const TruncatedSeries Q(std::vector<Rational>(P.begin(), P.begin() + N + 1));
    RootResult out{Q.power(make_rational(1, ms)), true};
    for (std::size_t n = 0; n <= N; ++n)
        out.all_integral = out.all_integral && is_integer(out.root[n]);
    return out;
}

std::vector<Rational> random_divisible_series(std::mt19937_64& rng, const Integer& modulus, std::size_t N,
                                              long range)
{
    std::uniform_int_distribution<long> draw(-range, range);
    std::vector<Rational> P(N + 1);
    P[0] = 1;
    for (std::size_t n = 1; n <= N; ++n)
        P[n] = Rational(modulus * draw(rng));
    return P;
}

} // namespace pfe
