#pragma once

// The enumeration engine and the conversions between power series, exponent
// sequences b_k and divisor-type sequences g(n).

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfe/arith.hpp"
#include "pfe/matrix.hpp"
#include "pfe/report.hpp"
#include "pfe/series.hpp"

namespace pfe {

/// F[row][n] for the rows of a matrix and n = 0..N. Rows keep the order of
/// the matrix they were computed from.
class FrequencyTable {
public:
    FrequencyTable() = default;
    FrequencyTable(std::vector<std::size_t> row_steps, std::size_t N);

    std::size_t order() const { return order_; }
    std::size_t row_count() const { return steps_.size(); }
    std::size_t row_step(std::size_t row) const { return steps_.at(row); }

    const Rational& operator()(std::size_t row, std::size_t n) const { return values_[row][n]; }
    Rational& operator()(std::size_t row, std::size_t n) { return values_[row][n]; }

    /// Sum of F over all rows with step k, i.e. F_k(n) summed across factors.
    Rational by_step(std::size_t k, std::size_t n) const;

private:
    std::vector<std::size_t> steps_;
    std::size_t order_ = 0;
    std::vector<std::vector<Rational>> values_;
};

struct EnumerationResult {
    /// P(0..N), P(0) = 1.
    std::vector<Rational> P;
    FrequencyTable F;

    TruncatedSeries series() const { return TruncatedSeries(P); }
};

/// Thrown when a weight V_n vanishes during enumeration.
class EnumerationError : public std::runtime_error {
public:
    EnumerationError(std::size_t n, const std::string& what)
        : std::runtime_error(what), index_(n) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

using WeightFunction = std::function<Rational(std::size_t)>;

struct EnumerationWeights {
    /// Row weight as a function of the row's step index; default U_k = k.
    WeightFunction U;
    /// Normalizer; default V_n = n.
    WeightFunction V;
};

/// For n = 1..N:  F[row][n] = sum_j a_row(j) P(n-j),
///                P(n) = (sum_row U(step(row)) F[row][n]) / V(n).
EnumerationResult enumerate(const PfeMatrix& m, std::size_t N, const EnumerationWeights& weights = {});

/// F[row][n] = sum_j a_row(j) P(n-j) for a given P.
FrequencyTable frequency_table(const PfeMatrix& m, std::span<const Rational> P, std::size_t N);

/// g(n) = sum_row f(step(row)) a_row(n), n = 1..N (1-based result). For a
/// product matrix this is sum_{d|n} b_d f(d) z^{n/d}.
Sequence column_weight_sums(const PfeMatrix& m, const WeightFunction& f, std::size_t N);

/// Product representation of a series: exponents b_k and the frequency table
/// of the corresponding z = 1 product matrix.
struct ProductRepresentation {
    Sequence b;
    std::vector<Rational> P;
    FrequencyTable F;
};

/// Recovers the unique b (and F) from P with P(0) = 1, step by step: the
/// known b_1..b_{n-1} give F_k(n) for k < n, the column-sum identity gives
/// F_n(n) = b_n. Throws std::invalid_argument when P(0) != 1.
ProductRepresentation series_to_pfe(std::span<const Rational> P, std::size_t N);

/// b from g by Moebius inversion, P(0) = 1 and n P(n) = sum_{k=1}^{n} g(k) P(n-k),
/// F from the product matrix of b.
ProductRepresentation g_to_pfe(std::span<const Rational> g, std::size_t N);

/// Checks sum_{k=1}^{n} g(k) P(n-k) = sum_row f(step) F[row][n] for n <= N,
/// with g the f-weighted column sums of m.
IdentityReport verify_divisor_sum(const PfeMatrix& m, const WeightFunction& f, std::span<const Rational> P,
                                  const FrequencyTable& F, std::size_t N);

/// For a product row (b, z) at step k checks (1 - z q^k) N_k(q) = b z q^k Q(q)
/// to order N, i.e. F_k(n) = z F_k(n-k) + b z P(n-k). Vacuous when k > N.
/// Throws std::invalid_argument unless step k holds exactly one product row.
IdentityReport frequency_row_check(const PfeMatrix& m, std::size_t k, const EnumerationResult& result,
                                   std::size_t N);

/// Default weight U_k = k / f(k) = k.
Rational identity_weight(std::size_t k);

} // namespace pfe
