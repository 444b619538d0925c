#include "pfe/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pfe {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs, std::size_t order)
    : coeffs_(order + 1, Rational(0))
{
    std::size_t i = 0;
    for (const auto& c : coeffs) {
        if (i > order)
            break;
        coeffs_[i++] = c;
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t power, std::size_t order)
{
    TruncatedSeries s(order);
    if (power <= order)
        s.coeffs_[power] = c;
    return s;
}

Rational& TruncatedSeries::at(std::size_t n)
{
    if (n >= coeffs_.size())
        throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[n];
}

const Rational& TruncatedSeries::at(std::size_t n) const
{
    if (n >= coeffs_.size())
        throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[n];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    TruncatedSeries out(order);
    const auto n = std::min(order + 1, coeffs_.size());
    std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::weighted() const
{
    TruncatedSeries out(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out.coeffs_[n] = coeffs_[n] * static_cast<unsigned long>(n);
    return out;
}

TruncatedSeries TruncatedSeries::power(const Rational& r) const
{
    if (coeffs_[0] != 1)
        throw std::invalid_argument("power: constant term must be 1, got " + to_string(coeffs_[0]));
    const auto N = order();
    TruncatedSeries out(N);
    out.coeffs_[0] = 1;
    const Rational r1 = r + 1;
    Rational acc, weight;
    for (std::size_t n = 1; n <= N; ++n) {
        acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (coeffs_[j] == 0)
                continue;
            weight = r1 * static_cast<unsigned long>(j);
            weight -= static_cast<unsigned long>(n);
            acc += weight * coeffs_[j] * out.coeffs_[n - j];
        }
        out.coeffs_[n] = acc / static_cast<unsigned long>(n);
    }
    return out;
}

TruncatedSeries TruncatedSeries::power_by_multiplication(unsigned k) const
{
    auto out = one(order());
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    for (std::size_t n = 0; n <= N; ++n)
        out.at(n) = a.at(n) + b.at(n);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    for (std::size_t n = 0; n <= N; ++n)
        out.at(n) = a.at(n) - b.at(n);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto N = std::min(a.order(), b.order());
    TruncatedSeries out(N);
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    for (std::size_t i = 0; i <= N; ++i) {
        if (ac[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= N; ++j) {
            if (bc[j] == 0)
                continue;
            out.at(i + j) += ac[i] * bc[j];
        }
    }
    return out;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries a)
{
    a *= c;
    return a;
}

} // namespace pfe
