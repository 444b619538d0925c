#pragma once

// Integrality of exponent sequences and of roots of generating functions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pfe/arith.hpp"
#include "pfe/series.hpp"

namespace pfe {

struct IntegralityResult {
    /// b(1..N), element 0 unused.
    Sequence b;
    bool coefficients_integral = true;
    bool exponents_integral = true;

    /// The two verdicts coincide, as they must for P(0) = 1.
    bool agree() const { return coefficients_integral == exponents_integral; }
};

/// Recovers b through series_to_pfe and reports whether P(1..N) and b(1..N)
/// are all integers.
IntegralityResult integrality_check(std::span<const Rational> P, std::size_t N);

struct DivisibilityVerdict {
    std::size_t m;
    /// Required lower bound on v_p(b_m): r when p does not divide m, r - 1 otherwise.
    long required;
    PadicValuation valuation;
    bool holds;
};

struct DivisibilityReport {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::size_t order = 0;
    /// First n with v_p(P(n)) < r, if any. When set, no verdicts are computed.
    std::optional<std::size_t> hypothesis_failure;
    std::vector<DivisibilityVerdict> verdicts;
    /// First m whose verdict fails.
    std::optional<std::size_t> counterexample;

    bool hypothesis_holds() const { return !hypothesis_failure; }
    bool passed() const { return hypothesis_holds() && !counterexample; }
};

/// If p^r divides P(n) for 1 <= n <= N then p^r | b_m for (p, m) = 1 and
/// p^{r-1} | b_m for p | m. Checks the hypothesis and every m <= N.
DivisibilityReport prime_power_divisibility(std::span<const Rational> P, std::uint64_t p, unsigned r,
                                            std::size_t N);

struct RootResult {
    TruncatedSeries root;
    bool all_integral = true;
};

/// Q(q)^{1/m^s} where m^t divides P(n) for 1 <= n <= N and s < t. Throws
/// std::invalid_argument naming the first n that breaks the hypothesis.
RootResult root_integrality(std::span<const Rational> P, const Integer& m, unsigned t, unsigned s, std::size_t N);

/// Random integer series with P(0) = 1 and P(n) = modulus * u_n,
/// u_n uniform in [-range, range].
std::vector<Rational> random_divisible_series(std::mt19937_64& rng, const Integer& modulus, std::size_t N,
                                              long range);

} // namespace pfe
