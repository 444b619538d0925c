#include "pfe/enumeration.hpp"

#include <algorithm>

namespace pfe {

FrequencyTable::FrequencyTable(std::vector<std::size_t> row_steps, std::size_t N)
    : steps_(std::move(row_steps)), order_(N), values_(steps_.size(), std::vector<Rational>(N + 1, Rational(0)))
{
}

Rational FrequencyTable::by_step(std::size_t k, std::size_t n) const
{
    Rational total = 0;
    for (std::size_t row = 0; row < steps_.size(); ++row)
        if (steps_[row] == k)
            total += values_[row][n];
    return total;
}

Rational identity_weight(std::size_t k)
{
    return Rational(static_cast<unsigned long>(k));
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

std::vector<SparseRow> materialize(const PfeMatrix& m, std::size_t N)
{
    std::vector<SparseRow> out;
    out.reserve(m.rows().size());
    for (const auto& row : m.rows())
        out.push_back(row.entries(N));
    return out;
}

std::vector<std::size_t> steps_of(const PfeMatrix& m)
{
    std::vector<std::size_t> steps;
    steps.reserve(m.rows().size());
    for (const auto& row : m.rows())
        steps.push_back(row.step());
    return steps;
}

Rational row_dot(const SparseRow& row, std::span<const Rational> P, std::size_t n)
{
    Rational acc = 0;
    for (const auto& [j, a] : row) {
        if (j > n)
            break;
        acc += a * P[n - j];
    }
    return acc;
}

} // namespace

EnumerationResult enumerate(const PfeMatrix& m, std::size_t N, const EnumerationWeights& weights)
{
    const auto& U = weights.U ? weights.U : WeightFunction(identity_weight);
    const auto& V = weights.V ? weights.V : WeightFunction(identity_weight);

    const auto rows = materialize(m, N);
    std::vector<Rational> row_weight;
    row_weight.reserve(rows.size());
    for (const auto& row : m.rows())
        row_weight.push_back(U(row.step()));

    EnumerationResult result{std::vector<Rational>(N + 1, Rational(0)), FrequencyTable(steps_of(m), N)};
    auto& P = result.P;
    P[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        const Rational v = V(n);
        if (v == 0)
            throw EnumerationError(n, "enumerate: weight V_" + std::to_string(n) + " is zero");
        Rational total = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto f = row_dot(rows[r], P, n);
            if (f == 0)
                continue;
            total += row_weight[r] * f;
            result.F(r, n) = std::move(f);
        }
        P[n] = total / v;
    }
    return result;
}

FrequencyTable frequency_table(const PfeMatrix& m, std::span<const Rational> P, std::size_t N)
{
    if (P.size() < N + 1)
        throw std::invalid_argument("frequency_table: P must be defined on 0..N");
    const auto rows = materialize(m, N);
    FrequencyTable F(steps_of(m), N);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t n = 1; n <= N; ++n)
            F(r, n) = row_dot(rows[r], P, n);
    return F;
}

Sequence column_weight_sums(const PfeMatrix& m, const WeightFunction& f, std::size_t N)
{
    Sequence g(N + 1, Rational(0));
    for (const auto& row : m.rows()) {
        const Rational w = f(row.step());
        if (w == 0)
            continue;
        for (const auto& [j, a] : row.entries(N))
            g[j] += w * a;
    }
    return g;
}

ProductRepresentation series_to_pfe(std::span<const Rational> P, std::size_t N)
{
    if (P.size() < N + 1)
        throw std::invalid_argument("series_to_pfe: P must be defined on 0..N");
    if (P[0] != 1)
        throw std::invalid_argument("series_to_pfe: P(0) must be 1, got " + to_string(P[0]));

    std::vector<std::size_t> steps(N);
    for (std::size_t k = 1; k <= N; ++k)
        steps[k - 1] = k;

    ProductRepresentation out{Sequence(N + 1, Rational(0)), std::vector<Rational>(P.begin(), P.begin() + N + 1),
                              FrequencyTable(std::move(steps), N)};
    auto& b = out.b;
    auto& F = out.F;
    for (std::size_t n = 1; n <= N; ++n) {
        // F_k(n) = b_k (P(n-k) + P(n-2k) + ...) for the steps already known.
        Rational weighted = 0;
        for (std::size_t k = 1; k < n; ++k) {
            if (b[k] == 0)
                continue;
            Rational tail = 0;
            for (std::size_t j = k; j <= n; j += k)
                tail += P[n - j];
            F(k - 1, n) = b[k] * tail;
            weighted += static_cast<unsigned long>(k) * F(k - 1, n);
        }
        // n P(n) = sum_{k<n} k F_k(n) + n F_n(n) and F_n(n) = b_n P(0).
        F(n - 1, n) = P[n] - weighted / static_cast<unsigned long>(n);
        b[n] = F(n - 1, n);
    }
    return out;
}

ProductRepresentation g_to_pfe(std::span<const Rational> g, std::size_t N)
{
    if (g.size() < N + 1)
        throw std::invalid_argument("g_to_pfe: g must be defined on 1..N");
    auto b = mobius_inversion(g, N);

    std::vector<Rational> P(N + 1, Rational(0));
    P[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (g[k] != 0)
                acc += g[k] * P[n - k];
        P[n] = acc / static_cast<unsigned long>(n);
    }

    const ProductFactor factor{Rational(1), b};
    auto F = frequency_table(build_product_matrix(std::span(&factor, 1), N), P, N);
    return {std::move(b), std::move(P), std::move(F)};
}

IdentityReport verify_divisor_sum(const PfeMatrix& m, const WeightFunction& f, std::span<const Rational> P,
                                  const FrequencyTable& F, std::size_t N)
{
    if (P.size() < N + 1 || F.order() < N || F.row_count() != m.rows().size())
        throw std::invalid_argument("verify_divisor_sum: P and F do not cover the matrix to order N");
    const auto g = column_weight_sums(m, f, N);
    std::vector<Rational> row_weight;
    for (const auto& row : m.rows())
        row_weight.push_back(f(row.step()));

    return compare_sides(
        "divisor_sum", 1, N,
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                acc += g[k] * P[n - k];
            return acc;
        },
        [&](std::size_t n) -> Rational {
            Rational acc = 0;
            for (std::size_t r = 0; r < row_weight.size(); ++r)
                acc += row_weight[r] * F(r, n);
            return acc;
        });
}

IdentityReport frequency_row_check(const PfeMatrix& m, std::size_t k, const EnumerationResult& result,
                                   std::size_t N)
{
    IdentityReport report;
    report.name = "frequency_row";
    report.order = N;
    if (k == 0)
        throw std::invalid_argument("frequency_row_check: step must be positive");
    if (k > N)
        return report;

    std::optional<std::size_t> found;
    for (std::size_t r = 0; r < m.rows().size(); ++r) {
        if (m.rows()[r].step() != k)
            continue;
        if (found)
            throw std::invalid_argument("frequency_row_check: several rows share step " + std::to_string(k));
        found = r;
    }
    if (!found || !m.rows()[*found].is_product())
        throw std::invalid_argument("frequency_row_check: step " + std::to_string(k) + " is not a product row");
    const auto& term = m.rows()[*found].terms().front();

    TruncatedSeries Nk(N);
    for (std::size_t n = 0; n <= N; ++n)
        Nk.at(n) = result.F(*found, n);
    const auto Q = TruncatedSeries(std::vector<Rational>(result.P.begin(), result.P.begin() + N + 1));
    const auto lhs = (TruncatedSeries::one(N) - TruncatedSeries::monomial(term.z, k, N)) * Nk;
    const auto rhs = TruncatedSeries::monomial(term.b * term.z, k, N) * Q;
    for (std::size_t n = 0; n <= N; ++n) {
        if (lhs[n] != rhs[n]) {
            report.fail(n, lhs[n], rhs[n]);
            break;
        }
    }
    return report;
}

} // namespace pfe
