#pragma once

// Truncated formal power series with exact rational coefficients c(0..N).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pfe/arith.hpp"

namespace pfe {

class TruncatedSeries {
public:
    /// The zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order = 0);

    /// Takes ownership of coefficients c(0..N); the order is size - 1.
    /// An empty vector is rejected.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    TruncatedSeries(std::initializer_list<Rational> coeffs, std::size_t order);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(const Rational& c, std::size_t power, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of q^n; zero beyond the truncation order.
    Rational operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

    /// Mutable coefficient; n must not exceed the order.
    Rational& at(std::size_t n);
    const Rational& at(std::size_t n) const;

    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Copy truncated (or zero-extended) to a new order.
    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator*=(const Rational& c);

    /// Coefficient n of the result is n * a(n).
    TruncatedSeries weighted() const;

    /// Q^r for a series with constant term 1, via
    ///   n P_r(n) = sum_{j=1}^{n} ((r+1) j - n) a(j) P_r(n-j).
    /// Throws std::invalid_argument when a(0) != 1.
    TruncatedSeries power(const Rational& r) const;

    /// Repeated Cauchy product; for cross-checking power().
    TruncatedSeries power_by_multiplication(unsigned k) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Binary operations truncate to the smaller of the two orders.
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, TruncatedSeries a);

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries weighted(const TruncatedSeries& a) { return a.weighted(); }
inline TruncatedSeries power_rational(const TruncatedSeries& a, const Rational& r) { return a.power(r); }

} // namespace pfe
