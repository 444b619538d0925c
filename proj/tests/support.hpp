#pragma once

// Naive reference computations shared by the tests. None of these go through
// the library's series arithmetic or enumeration engine.

#include <cstdint>
#include <random>
#include <vector>

#include "pfe/arith.hpp"

namespace support {

using pfe::Integer;
using pfe::Rational;

inline Integer naive_sigma(unsigned m, std::uint64_t n)
{
    Integer total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer term = 1;
        for (unsigned i = 0; i < m; ++i)
            term *= static_cast<unsigned long>(d);
        total += term;
    }
    return total;
}

inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t N)
{
    std::vector<Rational> out(N + 1, Rational(0));
    for (std::size_t i = 0; i <= N && i < a.size(); ++i)
        for (std::size_t j = 0; i + j <= N && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// prod_{k=1}^{N} (1 - q^k), expanded directly.
inline std::vector<Integer> euler_product(std::size_t N)
{
    std::vector<Integer> c(N + 1, Integer(0));
    c[0] = 1;
    for (std::size_t k = 1; k <= N; ++k)
        for (std::size_t n = N; n >= k; --n)
            c[n] -= c[n - k];
    return c;
}

inline Rational random_rational(std::mt19937_64& rng, long num_range, long den_max)
{
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_max);
    return pfe::make_rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_range, long den_max)
{
    for (;;) {
        auto x = random_rational(rng, num_range, den_max);
        if (x != 0)
            return x;
    }
}

} // namespace support
