#pragma once

// Named q-series and a registry of exact identity checks.
//
// Power conventions: P_r(n) denotes the coefficients of (1/(q;q)_inf)^r, so
// P_{-24}(n) = tau(n+1). The q^{1/24} prefactor of eta is never represented.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfe/arith.hpp"
#include "pfe/report.hpp"
#include "pfe/series.hpp"

namespace pfe {

enum class SeriesName {
    pentagonal,
    jacobi_cube,
    phi,
    psi,
    jtp,
    partition,
    distinct,
    overpartition,
    plane_partition,
    colored,
    eta_power,
    fibonacci,
    fibonacci_power,
    exp,
    sin_normalized,
    gamma_truncated,
    gap2_partitions,
    symmetric,
};

std::string_view to_string(SeriesName name);
std::optional<SeriesName> parse_series_name(std::string_view text);
const std::vector<SeriesName>& all_series_names();

struct NamedSeries {
    SeriesName name = SeriesName::partition;
    /// Exponent for colored, eta_power and fibonacci_power.
    Rational r = 1;
    /// Jacobi triple product variable; must be nonzero.
    Rational z = 1;
    /// exp(a q).
    Rational a = 1;
    /// Number of factors for sin_normalized and gamma_truncated.
    std::size_t m = 1;
    /// Variables for symmetric.
    std::vector<Rational> x;
};

/// Sum-side series (pentagonal, jacobi_cube, phi, psi, jtp, fibonacci) are
/// written down directly; product-defined ones go through the enumeration
/// engine. eta_power(r) is P_r, the coefficients of (q;q)_inf^{-r}.
TruncatedSeries named_series(const NamedSeries& spec, std::size_t N);

inline TruncatedSeries named_series(SeriesName name, std::size_t N)
{
    NamedSeries spec;
    spec.name = name;
    return named_series(spec, N);
}

// Generators driven by the recurrences themselves.

/// P_r from sum_j (-1)^j (n + (r-1) j(3j-1)/2) P_r(n - j(3j-1)/2) = 0.
TruncatedSeries eta_power_lehmer(const Rational& r, std::size_t N);

/// P_r from sum_{j>=0} (-1)^j (2j+1) (n + (r/3-1) j(j+1)/2) P_r(n - j(j+1)/2) = 0.
TruncatedSeries eta_power_ramanujan(const Rational& r, std::size_t N);

/// r_k(n), coefficients of phi(q)^k, from n r_k(n) + 2 sum_j (n - (k+1) j^2) r_k(n - j^2) = 0.
TruncatedSeries squares_power(const Rational& k, std::size_t N);

/// t_k(n), coefficients of psi(q)^k, from n t_k(n) + sum_j (n - (k+1) T_j) t_k(n - T_j) = 0.
TruncatedSeries triangular_power(const Rational& k, std::size_t N);

/// J_r(n, z), coefficients of J(q)^r with J(q) = 1 + sum (z^n + z^-n) q^{n^2}.
TruncatedSeries jtp_power(const Rational& r, const Rational& z, std::size_t N);

/// fib_r(n) from n fib_r(n) = (n+r-1) fib_r(n-1) + (n+2(r-1)) fib_r(n-2).
TruncatedSeries fibonacci_power_recurrence(const Rational& r, std::size_t N);

/// tau(1..N) (element 0 unused), tau(n) = P_{-24}(n-1).
std::vector<Integer> tau(std::size_t N);

/// A(n) = zeta(2n) / pi^{2n} for n = 1..N (element 0 unused), from
/// A(n) = (-1)^{n+1} n/(2n+1)! + sum_{k=1}^{n-1} (-1)^{k+1} A(n-k)/(2k+1)!.
/// (Dividing sum_k g(k) a(n-k) = n a(n) for sin(pi x)/(pi x) by pi^{2n} gives
/// the sign (-1)^{k+1}; the variant with (-1)^{n-k+1} already fails at n = 3.)
Sequence zeta_hat(std::size_t N);

/// zeta(2n)/pi^{2n} = (-1)^{n+1} B_{2n} 2^{2n} / (2 (2n)!), from Bernoulli numbers.
Rational zeta_hat_bernoulli(std::size_t n);

struct VerifyParams {
    std::optional<Rational> r;
    std::optional<Rational> s;
    std::optional<Rational> z;
    std::optional<Rational> k;
    std::optional<std::size_t> m;
    /// Q(q) for pr_ps; empty means the partition series.
    std::vector<Rational> series;
    /// Variables for newton_symmetric.
    std::vector<Rational> x;
};

struct IdentityInfo {
    std::string_view key;
    std::string_view summary;
    std::size_t default_order;
};

/// Every registered identity, in a stable order.
const std::vector<IdentityInfo>& identity_catalog();

/// Runs one registered check over n <= N. Unknown keys and invalid
/// parameters throw std::domain_error.
IdentityReport verify(std::string_view key, const VerifyParams& params, std::size_t N);

} // namespace pfe
