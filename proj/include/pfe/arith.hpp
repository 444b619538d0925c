#pragma once

// Exact arithmetic and the classical arithmetic functions used throughout the
// library: divisor sums, the Moebius function, pentagonal signs, p-adic
// valuations and Bernoulli numbers.
//
// Coefficient sequences come in two flavours:
//   * power-series coefficients P(0..N), stored 0-based;
//   * arithmetic sequences b(1..N), g(1..N), stored in a vector of size N + 1
//     whose element 0 is unused and held at zero.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pfe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Arithmetic sequence indexed 1..N; element 0 is unused.
using Sequence = std::vector<Rational>;

/// Builds a reduced rational from numerator/denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a" or "a/b" (whitespace around tokens ignored). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders "a" for integers and "a/b" otherwise.
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

/// Returns x as an Integer; throws std::domain_error when x is not integral.
Integer to_integer(const Rational& x);

/// x^e for any integer exponent (negative exponents need x != 0).
Rational pow(const Rational& x, long e);

bool is_prime(std::uint64_t n);

/// Sorted divisors of n >= 1 by trial division up to sqrt(n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moebius function; n = 0 is a domain error.
int mobius(std::uint64_t n);

/// sigma_m(n) = sum of m-th powers of the divisors of n; n = 0 is a domain error.
Integer sigma(unsigned m, std::uint64_t n);

struct OddEvenDivisorSums {
    Integer odd;
    Integer even;
};

/// Splits sigma_1(n) into the sums over odd and even divisors.
OddEvenDivisorSums sigma_odd_even(std::uint64_t n);

/// Solves g(n) = sum_{d|n} d b_d for b, i.e. n b_n = sum_{d|n} mu(n/d) g(d).
/// Both sequences are 1-based; g must have size >= N + 1.
Sequence mobius_inversion(std::span<const Rational> g, std::size_t N);

/// The forward map g(n) = sum_{d|n} d b_d.
Sequence divisor_weighted_sum(std::span<const Rational> b, std::size_t N);

/// a (a+1) ... (a+r-1); 1 when r = 0.
Rational rising_factorial(const Rational& a, unsigned r);

Integer factorial(unsigned n);

/// Generalized pentagonal number k(3k-1)/2 for any integer k.
std::int64_t pentagonal(std::int64_t k);

/// Coefficient e(n) of q^n in (q;q)_inf: (-1)^k when n = k(3k+-1)/2, else 0.
int pentagonal_sign(std::uint64_t n);

/// Triangular number k(k+1)/2.
std::int64_t triangular(std::int64_t k);

/// Exponent of a prime in a rational number; +infinity for zero.
class PadicValuation {
public:
    static PadicValuation infinity() { return PadicValuation{}; }
    static PadicValuation finite(long v) { return PadicValuation{v}; }

    bool is_infinite() const { return !value_.has_value(); }
    /// Only meaningful when finite.
    long value() const { return *value_; }

    /// True when the valuation is at least `bound` (always true for infinity).
    bool at_least(long bound) const { return is_infinite() || *value_ >= bound; }

    friend bool operator==(const PadicValuation&, const PadicValuation&) = default;

private:
    PadicValuation() = default;
    explicit PadicValuation(long v) : value_(v) {}
    std::optional<long> value_;
};

std::string to_string(const PadicValuation& v);

/// v_p(x); throws std::domain_error when p is not prime.
PadicValuation padic_valuation(const Rational& x, std::uint64_t p);

/// v_p of a nonzero integer; +infinity for zero.
PadicValuation padic_valuation(const Integer& x, std::uint64_t p);

/// Bernoulli number B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
/// Memoized behind a mutex; safe to call concurrently.
Rational bernoulli(unsigned n);

Integer binomial(unsigned n, unsigned k);

} // namespace pfe
