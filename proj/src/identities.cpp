#include "pfe/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "pfe/enumeration.hpp"
#include "pfe/matrix.hpp"

namespace pfe {

namespace {

constexpr std::array series_names{
    std::pair{SeriesName::pentagonal, std::string_view("pentagonal")},
    std::pair{SeriesName::jacobi_cube, std::string_view("jacobi_cube")},
    std::pair{SeriesName::phi, std::string_view("phi")},
    std::pair{SeriesName::psi, std::string_view("psi")},
    std::pair{SeriesName::jtp, std::string_view("jtp")},
    std::pair{SeriesName::partition, std::string_view("partition")},
    std::pair{SeriesName::distinct, std::string_view("distinct")},
    std::pair{SeriesName::overpartition, std::string_view("overpartition")},
    std::pair{SeriesName::plane_partition, std::string_view("plane_partition")},
    std::pair{SeriesName::colored, std::string_view("colored")},
    std::pair{SeriesName::eta_power, std::string_view("eta_power")},
    std::pair{SeriesName::fibonacci, std::string_view("fibonacci")},
    std::pair{SeriesName::fibonacci_power, std::string_view("fibonacci_power")},
    std::pair{SeriesName::exp, std::string_view("exp")},
    std::pair{SeriesName::sin_normalized, std::string_view("sin_normalized")},
    std::pair{SeriesName::gamma_truncated, std::string_view("gamma_truncated")},
    std::pair{SeriesName::gap2_partitions, std::string_view("gap2_partitions")},
    std::pair{SeriesName::symmetric, std::string_view("symmetric")},
};

Rational from_index(std::int64_t n)
{
    return Rational(static_cast<long>(n));
}

// Calls fn(sign, offset) for every generalized pentagonal number offset =
// j(3j-1)/2 <= n, j in Z, with sign = (-1)^j.
template <class Fn>
void for_each_pentagonal(std::size_t n, Fn&& fn)
{
    const auto limit = static_cast<std::int64_t>(n);
    fn(1, std::size_t{0});
    for (std::int64_t j = 1; pentagonal(j) <= limit; ++j) {
        const int sign = j % 2 == 0 ? 1 : -1;
        fn(sign, static_cast<std::size_t>(pentagonal(j)));
        if (pentagonal(-j) <= limit)
            fn(sign, static_cast<std::size_t>(pentagonal(-j)));
    }
}

std::vector<Integer> sigma_table(unsigned m, std::size_t N)
{
    std::vector<Integer> out(N + 1, Integer(0));
    for (std::size_t n = 1; n <= N; ++n)
        out[n] = sigma(m, n);
    return out;
}

TruncatedSeries engine_series(const PfeMatrix& m, std::size_t N)
{
    return enumerate(m, N).series();
}

TruncatedSeries gap2_series(std::size_t N)
{
    // D[n][m]: partitions of n into parts <= m with pairwise gaps >= 2.
    // D(n, m) = D(n, m-1) + D(n-m, m-2).
    std::vector<std::vector<Integer>> D(N + 1, std::vector<Integer>(N + 1, Integer(0)));
    for (std::size_t m = 0; m <= N; ++m)
        D[0][m] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t m = 1; m <= N; ++m) {
            D[n][m] = D[n][m - 1];
            if (m <= n)
                D[n][m] += m >= 2 ? D[n - m][m - 2] : Integer(n == m ? 1 : 0);
        }
    }
    TruncatedSeries out(N);
    for (std::size_t n = 0; n <= N; ++n)
        out.at(n) = Rational(D[n][N]);
    return out;
}

TruncatedSeries fibonacci_series(std::size_t N)
{
    TruncatedSeries out(N);
    out.at(0) = 1;
    if (N >= 1)
        out.at(1) = 1;
    for (std::size_t n = 2; n <= N; ++n)
        out.at(n) = out.at(n - 1) + out.at(n - 2);
    return out;
}

} // namespace

std::string_view to_string(SeriesName name)
{
    for (const auto& [value, text] : series_names)
        if (value == name)
            return text;
    return "unknown";
}

std::optional<SeriesName> parse_series_name(std::string_view text)
{
    for (const auto& [value, name] : series_names)
        if (name == text)
            return value;
    return std::nullopt;
}

const std::vector<SeriesName>& all_series_names()
{
    static const std::vector<SeriesName> names = [] {
        std::vector<SeriesName> out;
        for (const auto& entry : series_names)
            out.push_back(entry.first);
        return out;
    }();
    return names;
}

TruncatedSeries named_series(const NamedSeries& spec, std::size_t N)
{
    TruncatedSeries out(N);
    switch (spec.name) {
    case SeriesName::pentagonal:
        for (std::size_t n = 0; n <= N; ++n)
            out.at(n) = pentagonal_sign(n);
        return out;
    case SeriesName::jacobi_cube:
        for (std::int64_t k = 0; triangular(k) <= static_cast<std::int64_t>(N); ++k)
            out.at(static_cast<std::size_t>(triangular(k))) = from_index((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
        return out;
    case SeriesName::phi:
        out.at(0) = 1;
        for (std::size_t k = 1; k * k <= N; ++k)
            out.at(k * k) = 2;
        return out;
    case SeriesName::psi:
        for (std::int64_t k = 0; triangular(k) <= static_cast<std::int64_t>(N); ++k)
            out.at(static_cast<std::size_t>(triangular(k))) = 1;
        return out;
    case SeriesName::jtp:
        if (spec.z == 0)
            throw std::domain_error("jtp needs z != 0");
        out.at(0) = 1;
        for (std::size_t k = 1; k * k <= N; ++k)
            out.at(k * k) = pow(spec.z, static_cast<long>(k)) + pow(spec.z, -static_cast<long>(k));
        return out;
    case SeriesName::partition:
        return engine_series(partition_matrix(N), N);
    case SeriesName::distinct:
        return engine_series(distinct_parts_matrix(N), N);
    case SeriesName::overpartition:
        return engine_series(overpartition_matrix(N), N);
    case SeriesName::plane_partition:
        return engine_series(plane_partition_matrix(N), N);
    case SeriesName::colored:
        return engine_series(colored_partition_matrix(spec.r, N), N);
    case SeriesName::eta_power:
        return engine_series(partition_matrix(N), N).power(spec.r);
    case SeriesName::fibonacci:
        return fibonacci_series(N);
    case SeriesName::fibonacci_power:
        return fibonacci_series(N).power(spec.r);
    case SeriesName::exp:
        return engine_series(PfeMatrix({exponential_row(spec.a, 1)}, Layout::Form1), N);
    case SeriesName::sin_normalized:
        if (spec.m == 0)
            throw std::domain_error("sin_normalized needs m >= 1");
        return engine_series(sine_product_matrix(spec.m), N);
    case SeriesName::gamma_truncated:
        if (spec.m == 0)
            throw std::domain_error("gamma_truncated needs m >= 1");
        return engine_series(gamma_product_matrix(spec.m), N);
    case SeriesName::gap2_partitions:
        return gap2_series(N);
    case SeriesName::symmetric:
        return engine_series(symmetric_function_matrix(spec.x), N);
    }
    throw std::domain_error("unknown series name");
}

TruncatedSeries eta_power_lehmer(const Rational& r, std::size_t N)
{
    TruncatedSeries P(N);
    P.at(0) = 1;
    const Rational r1 = r - 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for_each_pentagonal(n, [&](int sign, std::size_t offset) {
            if (offset == 0)
                return;
            const Rational term = (Rational(static_cast<unsigned long>(n)) + r1 * static_cast<unsigned long>(offset)) *
                                  P.at(n - offset);
            if (sign > 0)
                acc -= term;
            else
                acc += term;
        });
        P.at(n) = acc / static_cast<unsigned long>(n);
    }
    return P;
}

TruncatedSeries eta_power_ramanujan(const Rational& r, std::size_t N)
{
    TruncatedSeries P(N);
    P.at(0) = 1;
    const Rational c = r / 3 - 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::int64_t j = 1; triangular(j) <= static_cast<std::int64_t>(n); ++j) {
            const auto t = static_cast<std::size_t>(triangular(j));
            const Rational term = from_index(2 * j + 1) * (Rational(static_cast<unsigned long>(n)) + c * t) * P.at(n - t);
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        P.at(n) = acc / static_cast<unsigned long>(n);
    }
    return P;
}

TruncatedSeries squares_power(const Rational& k, std::size_t N)
{
    TruncatedSeries R(N);
    R.at(0) = 1;
    const Rational k1 = k + 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t j = 1; j * j <= n; ++j)
            acc += (Rational(static_cast<unsigned long>(n)) - k1 * static_cast<unsigned long>(j * j)) * R.at(n - j * j);
        R.at(n) = -2 * acc / static_cast<unsigned long>(n);
    }
    return R;
}

TruncatedSeries triangular_power(const Rational& k, std::size_t N)
{
    TruncatedSeries T(N);
    T.at(0) = 1;
    const Rational k1 = k + 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::int64_t j = 1; triangular(j) <= static_cast<std::int64_t>(n); ++j) {
            const auto t = static_cast<std::size_t>(triangular(j));
            acc += (Rational(static_cast<unsigned long>(n)) - k1 * t) * T.at(n - t);
        }
        T.at(n) = -acc / static_cast<unsigned long>(n);
    }
    return T;
}

TruncatedSeries jtp_power(const Rational& r, const Rational& z, std::size_t N)
{
    if (z == 0)
        throw std::domain_error("jtp_power needs z != 0");
    std::vector<Rational> weight;
    for (std::size_t j = 0; j * j <= N; ++j)
        weight.push_back(pow(z, static_cast<long>(j)) + pow(z, -static_cast<long>(j)));

    TruncatedSeries J(N);
    J.at(0) = 1;
    const Rational r1 = r + 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t j = 1; j * j <= n; ++j)
            acc += (Rational(static_cast<unsigned long>(n)) - r1 * static_cast<unsigned long>(j * j)) * weight[j] *
                   J.at(n - j * j);
        J.at(n) = -acc / static_cast<unsigned long>(n);
    }
    return J;
}

TruncatedSeries fibonacci_power_recurrence(const Rational& r, std::size_t N)
{
    TruncatedSeries F(N);
    F.at(0) = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        const Rational nn(static_cast<unsigned long>(n));
        Rational acc = (nn + r - 1) * F.at(n - 1);
        if (n >= 2)
            acc += (nn + 2 * (r - 1)) * F.at(n - 2);
        F.at(n) = acc / nn;
    }
    return F;
}

std::vector<Integer> tau(std::size_t N)
{
    std::vector<Integer> out(N + 1, Integer(0));
    if (N == 0)
        return out;
    const auto P = eta_power_lehmer(-24, N - 1);
    for (std::size_t n = 1; n <= N; ++n)
        out[n] = to_integer(P.at(n - 1));
    return out;
}

Sequence zeta_hat(std::size_t N)
{
    // inv_odd_fact[k] = 1 / (2k+1)!
    std::vector<Rational> inv_odd_fact(N + 1);
    for (std::size_t k = 0; k <= N; ++k)
        inv_odd_fact[k] = make_rational(1, factorial(static_cast<unsigned>(2 * k + 1)));

    Sequence A(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = static_cast<unsigned long>(n) * inv_odd_fact[n];
        if (n % 2 == 0)
            acc = -acc;
        for (std::size_t k = 1; k < n; ++k) {
            // sign (-1)^{k+1}
            if (k % 2 == 1)
                acc += A[n - k] * inv_odd_fact[k];
            else
                acc -= A[n - k] * inv_odd_fact[k];
        }
        A[n] = acc;
    }
    return A;
}

Rational zeta_hat_bernoulli(std::size_t n)
{
    if (n == 0)
        throw std::domain_error("zeta_hat_bernoulli needs n >= 1");
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n);
    Rational value = bernoulli(static_cast<unsigned>(2 * n)) * Rational(two_pow) /
                     Rational(2 * factorial(static_cast<unsigned>(2 * n)));
    return n % 2 == 1 ? value : Rational(-value);
}

// ---------------------------------------------------------------------------
// Identity registry

namespace {

using Verifier = std::function<IdentityReport(const VerifyParams&, std::size_t)>;

struct Entry {
    IdentityInfo info;
    Verifier run;
};

Rational get(const std::optional<Rational>& value, const Rational& fallback)
{
    return value ? *value : fallback;
}

std::size_t positive_integer(const std::optional<Rational>& value, std::size_t fallback, std::string_view what)
{
    if (!value)
        return fallback;
    if (!is_integer(*value) || *value < 1)
        throw std::domain_error(std::string(what) + " must be a positive integer");
    return to_integer(*value).get_ui();
}

IdentityReport named(IdentityReport report, std::string_view key)
{
    report.name = std::string(key);
    return report;
}

IdentityReport check_series_equal(std::string name, const TruncatedSeries& a, const TruncatedSeries& b,
                                  std::size_t N)
{
    return compare_sides(std::move(name), 0, N, [&](std::size_t n) -> Rational { return a[n]; },
                         [&](std::size_t n) -> Rational { return b[n]; });
}

IdentityReport verify_euler_sigma(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(1, N);
    // sum_j (-1)^{j+1} sigma_1(n - j(3j-1)/2) = n e(n), sigma_1 vanishing off 1..n.
    auto report = compare_sides(
        "euler_sigma", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                if (offset < n)
                    acc += Rational(-sign * sig[n - offset]);
            });
            return acc;
        },
        [&](std::size_t n) -> Rational { return Rational(static_cast<long>(n) * pentagonal_sign(n)); });

    // Printed form: sigma_1(n) = sum_{j != 0} (-1)^{j+1} sigma_1(n - j(3j-1)/2), sigma_1(0) := n.
    report.merge(compare_sides(
        "euler_sigma", 1, N, [&](std::size_t n) -> Rational { return Rational(sig[n]); },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                if (offset == 0)
                    return;
                const Integer value = offset == n ? Integer(static_cast<unsigned long>(n)) : sig[n - offset];
                acc += Rational(-sign * value);
            });
            return acc;
        }));
    return report;
}

IdentityReport verify_ramanujan_partition(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(1, N);
    const auto p = enumerate(partition_matrix(N), N).P;
    return compare_sides(
        "ramanujan_partition", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t d = 1; d <= n; ++d)
                acc += sig[d] * p[n - d];
            return acc;
        },
        [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * p[n]; });
}

IdentityReport verify_plane_partition(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(2, N);
    const auto pl = enumerate(plane_partition_matrix(N), N).P;
    return compare_sides(
        "plane_partition", 1, N, [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * pl[n]; },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t d = 1; d <= n; ++d)
                acc += sig[d] * pl[n - d];
            return acc;
        });
}

IdentityReport verify_colored(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, 3);
    const auto sig = sigma_table(1, N);
    const auto pr = enumerate(colored_partition_matrix(r, N), N).P;
    return compare_sides(
        "colored", 1, N, [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * pr[n]; },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t d = 1; d <= n; ++d)
                acc += sig[d] * pr[n - d];
            return r * acc;
        });
}

IdentityReport verify_moments(const VerifyParams& params, std::size_t N)
{
    const auto m = params.m.value_or(1);
    const auto sig = sigma_table(static_cast<unsigned>(m), N);
    const auto result = enumerate(partition_matrix(N), N);
    const auto& p = result.P;

    std::vector<Rational> M(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            Integer km;
            mpz_ui_pow_ui(km.get_mpz_t(), k, static_cast<unsigned long>(m));
            M[n] += Rational(km) * result.F.by_step(k, n);
        }

    auto report = compare_sides(
        "moments", 1, N, [&](std::size_t n) -> Rational { return M[n]; },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t d = 1; d <= n; ++d)
                acc += sig[d] * p[n - d];
            return acc;
        });
    report.merge(compare_sides(
        "moments", 1, N, [&](std::size_t n) -> Rational { return Rational(sig[n]); },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                if (sign > 0)
                    acc += M[n - offset];
                else
                    acc -= M[n - offset];
            });
            return acc;
        }));
    return report;
}

IdentityReport verify_frequency_indicator(const VerifyParams& params, std::size_t N)
{
    const auto k = positive_integer(params.k, 1, "k");
    const auto result = enumerate(partition_matrix(N), N);
    return compare_sides(
        "frequency_indicator", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            if (k > N)
                return acc;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                const auto& f = result.F.by_step(k, n - offset);
                if (sign > 0)
                    acc += f;
                else
                    acc -= f;
            });
            return acc;
        },
        [&](std::size_t n) -> Rational { return Rational(n % k == 0 ? 1 : 0); });
}

IdentityReport verify_mu_frequency(const VerifyParams&, std::size_t N)
{
    const auto result = enumerate(partition_matrix(N), N);
    return compare_sides(
        "mu_frequency", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                const int mu = mobius(k);
                if (mu != 0)
                    acc += mu * result.F.by_step(k, n);
            }
            return acc;
        },
        [&](std::size_t n) -> Rational { return result.P[n - 1]; });
}

IdentityReport verify_ewell(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(1, N);
    return compare_sides(
        "ewell", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::int64_t k = 0; triangular(k) < static_cast<std::int64_t>(n); ++k) {
                const Rational term = from_index(2 * k + 1) * sig[n - static_cast<std::size_t>(triangular(k))];
                if (k % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            return acc;
        },
        [&](std::size_t n) -> Rational {
            for (std::int64_t k = 0; triangular(k) <= static_cast<std::int64_t>(n); ++k) {
                if (triangular(k) == static_cast<std::int64_t>(n)) {
                    const Rational v = from_index(k * (k + 1) * (2 * k + 1)) / 6;
                    return k % 2 == 0 ? Rational(-v) : v;
                }
            }
            return Rational(0);
        });
}

IdentityReport verify_sigma_convolution(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(1, N);
    const auto p = enumerate(partition_matrix(N), N).P;
    return compare_sides(
        "sigma_convolution", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k < n; ++k)
                acc += Rational(sig[k] * sig[n - k]);
            return acc;
        },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                // (-1)^{j+1} (n - w) w p(n - w)
                const Rational term = static_cast<unsigned long>((n - offset) * offset) * p[n - offset];
                if (sign > 0)
                    acc -= term;
                else
                    acc += term;
            });
            return acc;
        });
}

IdentityReport verify_zeta_rec(const VerifyParams&, std::size_t N)
{
    const auto A = zeta_hat(N);
    return compare_sides(
        "zeta_rec", 1, N, [&](std::size_t n) -> Rational { return A[n]; }, [](std::size_t n) -> Rational { return zeta_hat_bernoulli(n); });
}

IdentityReport verify_pr_ps(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, 2);
    const Rational s = get(params.s, 1);
    if (r == 0 || s == 0)
        throw std::domain_error("pr_ps needs nonzero r and s");
    TruncatedSeries Q = params.series.empty() ? named_series(SeriesName::partition, N)
                                              : TruncatedSeries(params.series).truncated(N);
    if (Q[0] != 1)
        throw std::domain_error("pr_ps needs a series with constant term 1");
    const auto Pr = Q.power(r);
    const auto Ps = Q.power(s);
    const Rational c = r / s + 1;
    return compare_sides(
        "pr_ps", 0, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t j = 0; j <= n; ++j)
                acc += (Rational(static_cast<unsigned long>(n)) - c * static_cast<unsigned long>(j)) * Pr[n - j] * Ps[j];
            return acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
}

TruncatedSeries reference_power(const TruncatedSeries& Q, const Rational& r)
{
    if (is_integer(r) && r >= 0)
        return Q.power_by_multiplication(static_cast<unsigned>(to_integer(r).get_ui()));
    return Q.power(r);
}

IdentityReport verify_lehmer_gen(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, -24);
    const auto Pr = named_series(SeriesName::partition, N).power(r);
    auto report = compare_sides(
        "lehmer_gen", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for_each_pentagonal(n, [&](int sign, std::size_t offset) {
                const Rational term =
                    (Rational(static_cast<unsigned long>(n)) + (r - 1) * static_cast<unsigned long>(offset)) *
                    Pr[n - offset];
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            });
            return acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
    report.merge(check_series_equal("lehmer_gen", eta_power_lehmer(r, N), Pr, N));
    return report;
}

IdentityReport verify_ramanujan_gen(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, -24);
    const auto Pr = named_series(SeriesName::partition, N).power(r);
    const Rational c = r / 3 - 1;
    auto report = compare_sides(
        "ramanujan_gen", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::int64_t j = 0; triangular(j) <= static_cast<std::int64_t>(n); ++j) {
                const auto t = static_cast<std::size_t>(triangular(j));
                const Rational term =
                    from_index(2 * j + 1) * (Rational(static_cast<unsigned long>(n)) + c * t) * Pr[n - t];
                if (j % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            return acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
    report.merge(check_series_equal("ramanujan_gen", eta_power_ramanujan(r, N), Pr, N));

    if (r == -24) {
        // (n-1) tau(n) = sum_{j>=1} (-1)^{j+1} (2j+1) (n - 1 - 9 j(j+1)/2) tau(n - j(j+1)/2)
        const auto tau_at = [&](std::int64_t n) -> Rational { return n >= 1 ? Pr[static_cast<std::size_t>(n - 1)] : Rational(0); };
        report.merge(compare_sides(
            "ramanujan_gen", 1, N + 1,
            [&](std::size_t n) -> Rational { return from_index(static_cast<std::int64_t>(n) - 1) * tau_at(static_cast<std::int64_t>(n)); },
            [&](std::size_t n) -> Rational {
                Rational acc = 0;
                const auto nn = static_cast<std::int64_t>(n);
                for (std::int64_t j = 1; triangular(j) < nn; ++j) {
                    const Rational term = from_index((2 * j + 1) * (nn - 1 - 9 * triangular(j))) * tau_at(nn - triangular(j));
                    if (j % 2 == 1)
                        acc += term;
                    else
                        acc -= term;
                }
                return acc;
            }));
    }
    return report;
}

IdentityReport verify_fibonacci_power(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, 1);
    const auto fib = named_series(SeriesName::fibonacci, N);
    const auto fr = fib.power(r);
    auto report = compare_sides(
        "fibonacci_power", 1, N, [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * fr[n]; },
        [&](std::size_t n) -> Rational {
            const Rational nn(static_cast<unsigned long>(n));
            Rational acc = (nn + r - 1) * fr[n - 1];
            if (n >= 2)
                acc += (nn + 2 * (r - 1)) * fr[n - 2];
            return acc;
        });
    report.merge(check_series_equal("fibonacci_power", fibonacci_power_recurrence(r, N), fr, N));
    if (r == 1)
        report.merge(compare_sides(
            "fibonacci_power", 2, N, [&](std::size_t n) -> Rational { return fr[n]; },
            [&](std::size_t n) -> Rational { return fr[n - 1] + fr[n - 2]; }));
    return report;
}

IdentityReport verify_squares_rec(const VerifyParams& params, std::size_t N)
{
    const Rational k = get(params.k, 4);
    const auto rk = reference_power(named_series(SeriesName::phi, N), k);
    auto report = compare_sides(
        "squares_rec", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t j = 1; j * j <= n; ++j)
                acc += (Rational(static_cast<unsigned long>(n)) - (k + 1) * static_cast<unsigned long>(j * j)) *
                       rk[n - j * j];
            return static_cast<unsigned long>(n) * rk[n] + 2 * acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
    report.merge(check_series_equal("squares_rec", squares_power(k, N), rk, N));
    return report;
}

IdentityReport verify_triangular_rec(const VerifyParams& params, std::size_t N)
{
    const Rational k = get(params.k, 4);
    const auto tk = reference_power(named_series(SeriesName::psi, N), k);
    auto report = compare_sides(
        "triangular_rec", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = static_cast<unsigned long>(n) * tk[n];
            for (std::int64_t j = 1; triangular(j) <= static_cast<std::int64_t>(n); ++j) {
                const auto t = static_cast<std::size_t>(triangular(j));
                acc += (Rational(static_cast<unsigned long>(n)) - (k + 1) * t) * tk[n - t];
            }
            return acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
    report.merge(check_series_equal("triangular_rec", triangular_power(k, N), tk, N));
    return report;
}

IdentityReport verify_jtp_power_rec(const VerifyParams& params, std::size_t N)
{
    const Rational r = get(params.r, make_rational(1, 2));
    const Rational z = get(params.z, 2);
    if (z == 0)
        throw std::domain_error("jtp_power_rec needs z != 0");
    NamedSeries spec;
    spec.name = SeriesName::jtp;
    spec.z = z;
    const auto J = reference_power(named_series(spec, N), r);
    auto report = compare_sides(
        "jtp_power_rec", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = static_cast<unsigned long>(n) * J[n];
            for (std::size_t j = 1; j * j <= n; ++j)
                acc += (Rational(static_cast<unsigned long>(n)) - (r + 1) * static_cast<unsigned long>(j * j)) *
                       (pow(z, static_cast<long>(j)) + pow(z, -static_cast<long>(j))) * J[n - j * j];
            return acc;
        },
        [](std::size_t) -> Rational { return Rational(0); });
    report.merge(check_series_equal("jtp_power_rec", jtp_power(r, z, N), J, N));
    return report;
}

IdentityReport verify_gauss_g(const VerifyParams&, std::size_t N)
{
    const auto sig = sigma_table(1, N);
    Sequence g(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n) {
        if (n % 2 == 1)
            g[n] = 2 * sig[n];
        else
            g[n] = -2 * sig[n] + 2 * sig[n / 2];
    }

    // g as the weighted column sums of the triple-product matrix at z = 1.
    const auto columns = column_weight_sums(jacobi_triple_product_matrix(1, N), identity_weight, N);
    auto report = compare_sides(
        "gauss_g", 1, N, [&](std::size_t n) -> Rational { return g[n]; }, [&](std::size_t n) -> Rational { return columns[n]; });

    // Unsimplified even case -(2 sigma^o + sigma^e).
    report.merge(compare_sides(
        "gauss_g", 1, N, [&](std::size_t n) -> Rational { return g[n]; },
        [&](std::size_t n) -> Rational {
            if (n % 2 == 1)
                return Rational(2 * sig[n]);
            const auto split = sigma_odd_even(n);
            return Rational(-(2 * split.odd + split.even));
        }));

    const auto phi = named_series(SeriesName::phi, N);
    report.merge(compare_sides(
        "gauss_g", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += g[k] * phi[n - k];
            return acc;
        },
        [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * phi[n]; }));

    // g(k)/2 + sum_{j>=1} g(k - j^2) = k when k is a square, else 0.
    report.merge(compare_sides(
        "gauss_g", 1, N,
        [&](std::size_t k) -> Rational {
            Rational acc = g[k] / 2;
            for (std::size_t j = 1; j * j < k; ++j)
                acc += g[k - j * j];
            return acc;
        },
        [&](std::size_t k) -> Rational {
            std::size_t j = 1;
            while (j * j < k)
                ++j;
            return Rational(j * j == k ? static_cast<long>(k) : 0L);
        }));
    return report;
}

IdentityReport verify_newton_symmetric(const VerifyParams& params, std::size_t N)
{
    std::vector<Rational> x = params.x;
    if (x.empty())
        x = {Rational(1), Rational(2), make_rational(1, 3), make_rational(-1, 2)};
    const auto matrix = symmetric_function_matrix(x);
    const auto h = enumerate(matrix, N).P;

    Sequence power_sum(N + 1, Rational(0));
    for (std::size_t k = 1; k <= N; ++k)
        for (const auto& xi : x)
            power_sum[k] += pow(xi, static_cast<long>(k));

    const auto columns = column_weight_sums(matrix, identity_weight, N);
    auto report = compare_sides(
        "newton_symmetric", 1, N, [&](std::size_t n) -> Rational { return columns[n]; },
        [&](std::size_t n) -> Rational { return power_sum[n]; });
    report.merge(compare_sides(
        "newton_symmetric", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += power_sum[k] * h[n - k];
            return acc;
        },
        [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * h[n]; }));
    return report;
}

IdentityReport verify_truncated_product(std::string_view key, const PfeMatrix& matrix, const Sequence& g,
                                        const TruncatedSeries& direct, std::size_t N)
{
    const auto P = enumerate(matrix, N).P;
    const auto columns = column_weight_sums(matrix, identity_weight, N);
    auto report = compare_sides(
        std::string(key), 1, N, [&](std::size_t n) -> Rational { return columns[n]; }, [&](std::size_t n) -> Rational { return g[n]; });
    report.merge(compare_sides(
        std::string(key), 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += g[k] * P[n - k];
            return acc;
        },
        [&](std::size_t n) -> Rational { return static_cast<unsigned long>(n) * P[n]; }));
    report.merge(compare_sides(
        std::string(key), 0, N, [&](std::size_t n) -> Rational { return P[n]; }, [&](std::size_t n) -> Rational { return direct[n]; }));
    return report;
}

IdentityReport verify_sin_truncated(const VerifyParams& params, std::size_t N)
{
    const auto m = params.m.value_or(100);
    if (m == 0)
        throw std::domain_error("sin_truncated needs m >= 1");
    Sequence g(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= m; ++k)
            g[n] -= pow(Rational(static_cast<unsigned long>(k)), -2 * static_cast<long>(n));

    auto direct = TruncatedSeries::one(N);
    for (std::size_t k = 1; k <= m; ++k)
        direct = direct * TruncatedSeries({Rational(1), make_rational(-1, Integer(static_cast<unsigned long>(k * k)))}, N);
    return verify_truncated_product("sin_truncated", sine_product_matrix(m), g, direct, N);
}

IdentityReport verify_gamma_truncated(const VerifyParams& params, std::size_t N)
{
    const auto m = params.m.value_or(100);
    if (m == 0)
        throw std::domain_error("gamma_truncated needs m >= 1");
    Sequence g(N + 1, Rational(0));
    for (std::size_t n = 2; n <= N; ++n) {
        for (std::size_t k = 1; k <= m; ++k)
            g[n] += pow(Rational(static_cast<unsigned long>(k)), -static_cast<long>(n));
        if (n % 2 == 0)
            g[n] = -g[n];
    }

    // prod (1 + x/k) exp(-x/k), expanded factor by factor.
    auto direct = TruncatedSeries::one(N);
    for (std::size_t k = 1; k <= m; ++k) {
        const Rational inv = make_rational(1, Integer(static_cast<unsigned long>(k)));
        TruncatedSeries e(N);
        Rational term = 1;
        for (std::size_t n = 0; n <= N; ++n) {
            e.at(n) = term;
            term *= -inv / static_cast<unsigned long>(n + 1);
        }
        direct = direct * TruncatedSeries({Rational(1), inv}, N) * e;
    }
    return verify_truncated_product("gamma_truncated", gamma_product_matrix(m), g, direct, N);
}

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries{
        {{"euler_sigma", "Euler's pentagonal recurrence for sigma_1", 200}, verify_euler_sigma},
        {{"ramanujan_partition", "sum sigma_1(d) p(n-d) = n p(n)", 100}, verify_ramanujan_partition},
        {{"plane_partition", "n PL(n) = sum sigma_2(d) PL(n-d)", 60}, verify_plane_partition},
        {{"colored", "n p_r(n) = r sum sigma_1(d) p_r(n-d)", 60}, verify_colored},
        {{"moments", "moments of the frequency function vs sigma_m", 100}, verify_moments},
        {{"frequency_indicator", "alternating pentagonal sum of F_k is [k | n]", 100}, verify_frequency_indicator},
        {{"mu_frequency", "sum mu(k) F_k(n) = p(n-1)", 100}, verify_mu_frequency},
        {{"ewell", "Ewell's triangular recurrence for sigma_1", 200}, verify_ewell},
        {{"sigma_convolution", "sigma_1 convolution via partitions", 100}, verify_sigma_convolution},
        {{"zeta_rec", "zeta(2n)/pi^2n recurrence vs Bernoulli numbers", 30}, verify_zeta_rec},
        {{"pr_ps", "two-power recurrence for Q^r and Q^s", 30}, verify_pr_ps},
        {{"lehmer_gen", "pentagonal recurrence for P_r", 60}, verify_lehmer_gen},
        {{"ramanujan_gen", "triangular recurrence for P_r (tau at r = -24)", 60}, verify_ramanujan_gen},
        {{"fibonacci_power", "three-term recurrence for powers of 1/(1-q-q^2)", 60}, verify_fibonacci_power},
        {{"squares_rec", "recurrence for r_k(n)", 100}, verify_squares_rec},
        {{"triangular_rec", "recurrence for t_k(n)", 100}, verify_triangular_rec},
        {{"jtp_power_rec", "recurrence for powers of the triple product sum", 40}, verify_jtp_power_rec},
        {{"gauss_g", "column sums of the triple-product matrix at z = 1", 200}, verify_gauss_g},
        {{"newton_symmetric", "Newton's identity for complete symmetric functions", 20}, verify_newton_symmetric},
        {{"sin_truncated", "finite sine product, sum g_m(k) P(n-k) = n P(n)", 8}, verify_sin_truncated},
        {{"gamma_truncated", "finite Weierstrass product of 1/Gamma", 8}, verify_gamma_truncated},
    };
    return entries;
}

} // namespace

const std::vector<IdentityInfo>& identity_catalog()
{
    static const std::vector<IdentityInfo> catalog = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return catalog;
}

IdentityReport verify(std::string_view key, const VerifyParams& params, std::size_t N)
{
    if (N == 0)
        throw std::domain_error("verify needs order N >= 1");
    for (const auto& e : registry())
        if (e.info.key == key)
            return named(e.run(params, N), key);
    throw std::domain_error("unknown identity key '" + std::string(key) + "'");
}

} // namespace pfe
