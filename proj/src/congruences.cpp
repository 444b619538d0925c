#include "pfe/congruences.hpp"

#include <stdexcept>

#include "pfe/identities.hpp"

namespace pfe {

const std::vector<CongruenceFamily>& congruence_families()
{
    static const std::vector<CongruenceFamily> families{
        {5, 1, 0, false, "P_r(5m+1) = 0 mod 5 when r = 0 mod 5"},
        {5, 2, 2, false, "P_r(5m+2) = 0 mod 5 when r = 2 mod 5"},
        {5, 3, 4, false, "P_r(5m+3) = 0 mod 5 when r = 4 mod 5"},
        {5, 4, 1, false, "P_r(5m+4) = 0 mod 5 when r = 1 mod 5"},
        {3, 1, 0, true, "P_r(3m+1) = 0 mod 3 when r = 0 mod 3, r integer"},
        {3, 2, 0, true, "P_r(3m+2) = 0 mod 3 when r = 0 mod 3, r integer"},
    };
    return families;
}

const CongruenceFamily* find_family(std::uint64_t p, std::size_t k)
{
    for (const auto& f : congruence_families())
        if (f.modulus == p && f.residue == k)
            return &f;
    return nullptr;
}

std::optional<std::string> residue_violation(const CongruenceFamily& family, const Rational& r)
{
    const auto p = std::to_string(family.modulus);
    if (family.integer_r_only && !is_integer(r))
        return "r = " + to_string(r) + " is not an integer";
    if (!padic_valuation(r, family.modulus).at_least(0))
        return "r = " + to_string(r) + " has " + p + " in its denominator";
    if (!padic_valuation(r - family.r_residue, family.modulus).at_least(1))
        return "r = " + to_string(r) + " is not " + std::to_string(family.r_residue) + " mod " + p;
    return std::nullopt;
}

namespace {

std::optional<std::size_t> first_nondivisible(const TruncatedSeries& P, std::uint64_t p, std::size_t k, std::size_t M)
{
    for (std::size_t m = 0; m <= M; ++m) {
        const auto n = p * m + k;
        if (n == 0)
            continue;
        if (!padic_valuation(P[n], p).at_least(1))
            return m;
    }
    return std::nullopt;
}

} // namespace

IdentityReport check_family(const CongruenceFamily& family, const Rational& r, std::size_t M)
{
    if (auto why = residue_violation(family, r))
        throw std::invalid_argument("congruence family mod " + std::to_string(family.modulus) + ", k = " +
                                    std::to_string(family.residue) + ": " + *why);
    const auto P = eta_power_ramanujan(r, family.modulus * M + family.residue);
    IdentityReport report;
    report.name = "congruence";
    report.order = M;
    if (auto m = first_nondivisible(P, family.modulus, family.residue, M)) {
        const auto n = family.modulus * *m + family.residue;
        report.fail(n, P[n], Rational(0));
    }
    return report;
}

std::vector<ScanCell> scan(std::uint64_t p, std::span<const Rational> rs, std::size_t M)
{
    if (!is_prime(p))
        throw std::invalid_argument("scan: p must be prime");
    std::vector<ScanCell> cells;
    for (const auto& r : rs) {
        const auto P = eta_power_ramanujan(r, p * M + p - 1);
        for (std::size_t k = 1; k < p; ++k) {
            const auto* family = find_family(p, k);
            const bool covered = family && !residue_violation(*family, r);
            const auto failure = first_nondivisible(P, p, k, M);
            cells.push_back({r, k, covered, !failure, failure});
        }
    }
    return cells;
}

} // namespace pfe
