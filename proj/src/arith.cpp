#include "pfe/arith.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace pfe {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    // mpz_class rejects a leading '+'.
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s, text));
    const Integer num = parse_integer(s.substr(0, slash), text);
    const Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& x)
{
    return x.get_str(10);
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

Integer to_integer(const Rational& x)
{
    if (!is_integer(x))
        throw std::domain_error("value " + to_string(x) + " is not an integer");
    return x.get_num();
}

Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0)
            throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / x, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    // gcd(num, den) = 1 already, powers stay coprime.
    Rational out;
    mpz_swap(out.get_num_mpz_t(), num.get_mpz_t());
    mpz_swap(out.get_den_mpz_t(), den.get_mpz_t());
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("divisors of 0");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("mobius(0) is undefined");
    int sign = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

Integer sigma(unsigned m, std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("sigma(m, 0) is undefined");
    Integer total = 0;
    for (const auto d : divisors(n)) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), m);
        total += term;
    }
    return total;
}

OddEvenDivisorSums sigma_odd_even(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("sigma_odd_even(0) is undefined");
    OddEvenDivisorSums out{0, 0};
    for (const auto d : divisors(n)) {
        if (d % 2 == 1)
            out.odd += static_cast<unsigned long>(d);
        else
            out.even += static_cast<unsigned long>(d);
    }
    return out;
}

Sequence mobius_inversion(std::span<const Rational> g, std::size_t N)
{
    if (g.size() < N + 1)
        throw std::invalid_argument("mobius_inversion: g must be defined on 1..N");
    Sequence b(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (const auto d : divisors(n)) {
            const int mu = mobius(n / d);
            if (mu == 1)
                acc += g[d];
            else if (mu == -1)
                acc -= g[d];
        }
        b[n] = acc / static_cast<unsigned long>(n);
    }
    return b;
}

Sequence divisor_weighted_sum(std::span<const Rational> b, std::size_t N)
{
    if (b.size() < N + 1)
        throw std::invalid_argument("divisor_weighted_sum: b must be defined on 1..N");
    Sequence g(N + 1, Rational(0));
    for (std::size_t n = 1; n <= N; ++n)
        for (const auto d : divisors(n))
            g[n] += static_cast<unsigned long>(d) * b[d];
    return g;
}

Rational rising_factorial(const Rational& a, unsigned r)
{
    Rational out = 1;
    for (unsigned i = 0; i < r; ++i)
        out *= a + i;
    return out;
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::int64_t pentagonal(std::int64_t k)
{
    return k * (3 * k - 1) / 2;
}

int pentagonal_sign(std::uint64_t n)
{
    const auto target = static_cast<std::int64_t>(n);
    for (std::int64_t k = 0; pentagonal(k) <= target; ++k) {
        if (pentagonal(k) == target || pentagonal(-k) == target)
            return k % 2 == 0 ? 1 : -1;
    }
    return 0;
}

std::int64_t triangular(std::int64_t k)
{
    return k * (k + 1) / 2;
}

std::string to_string(const PadicValuation& v)
{
    return v.is_infinite() ? std::string("inf") : std::to_string(v.value());
}

PadicValuation padic_valuation(const Integer& x, std::uint64_t p)
{
    if (!is_prime(p))
        throw std::domain_error("padic_valuation: " + std::to_string(p) + " is not prime");
    if (x == 0)
        return PadicValuation::infinity();
    Integer rest = x;
    const Integer prime(static_cast<unsigned long>(p));
    const auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    return PadicValuation::finite(static_cast<long>(v));
}

PadicValuation padic_valuation(const Rational& x, std::uint64_t p)
{
    if (!is_prime(p))
        throw std::domain_error("padic_valuation: " + std::to_string(p) + " is not prime");
    if (x == 0)
        return PadicValuation::infinity();
    const auto num = padic_valuation(Integer(x.get_num()), p);
    const auto den = padic_valuation(Integer(x.get_den()), p);
    return PadicValuation::finite(num.value() - den.value());
}

Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};

    std::lock_guard lock(mutex);
    while (cache.size() <= n) {
        const auto m = static_cast<unsigned>(cache.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / (m + 1));
    }
    return cache[n];
}

} // namespace pfe
