#include "pfe/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pfe {

RowSpec RowSpec::product(std::size_t step, Rational b, Rational z)
{
    if (step == 0)
        throw std::domain_error("row step index must be positive");
    if (z == 0)
        throw std::domain_error("product row needs z != 0");
    RowSpec row;
    row.step_ = step;
    row.terms_.push_back({std::move(b), std::move(z)});
    return row;
}

RowSpec RowSpec::explicit_row(std::size_t step, std::map<std::size_t, Rational> entries)
{
    if (step == 0)
        throw std::domain_error("row step index must be positive");
    if (entries.contains(0))
        throw std::invalid_argument("explicit row entries at column 0 are not allowed");
    RowSpec row;
    row.step_ = step;
    row.explicit_ = std::move(entries);
    return row;
}

Rational RowSpec::entry(std::size_t column) const
{
    Rational value = 0;
    if (column == 0)
        return value;
    if (column % step_ == 0) {
        const auto r = static_cast<long>(column / step_);
        for (const auto& t : terms_)
            if (t.b != 0)
                value += t.b * pow(t.z, r);
    }
    if (const auto it = explicit_.find(column); it != explicit_.end())
        value += it->second;
    return value;
}

std::vector<std::pair<std::size_t, Rational>> RowSpec::entries(std::size_t N) const
{
    std::map<std::size_t, Rational> acc;
    for (const auto& t : terms_) {
        if (t.b == 0)
            continue;
        Rational zr = 1;
        for (std::size_t j = step_; j <= N; j += step_) {
            zr *= t.z;
            acc[j] += t.b * zr;
        }
    }
    for (const auto& [j, v] : explicit_)
        if (j <= N)
            acc[j] += v;

    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(acc.size());
    for (auto& [j, v] : acc)
        if (v != 0)
            out.emplace_back(j, std::move(v));
    return out;
}

void RowSpec::absorb(const RowSpec& other)
{
    if (other.step_ != step_)
        throw std::invalid_argument("absorb: rows have different step indices");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    for (const auto& [j, v] : other.explicit_)
        explicit_[j] += v;
}

PfeMatrix::PfeMatrix(std::vector<RowSpec> rows, Layout layout) : rows_(std::move(rows)), layout_(layout)
{
    if (layout_ != Layout::Form1)
        return;
    std::vector<std::size_t> steps;
    steps.reserve(rows_.size());
    for (const auto& r : rows_)
        steps.push_back(r.step());
    std::sort(steps.begin(), steps.end());
    if (std::adjacent_find(steps.begin(), steps.end()) != steps.end())
        throw std::invalid_argument("Form1 matrix needs distinct step indices");
}

Rational PfeMatrix::step_column_entry(std::size_t step, std::size_t column) const
{
    Rational value = 0;
    for (const auto& r : rows_)
        if (r.step() == step)
            value += r.entry(column);
    return value;
}

PfeMatrix build_product_matrix(std::span<const ProductFactor> factors, std::size_t N)
{
    for (const auto& f : factors) {
        if (f.z == 0)
            throw std::domain_error("product factor needs z != 0");
        if (f.b.size() < N + 1)
            throw std::invalid_argument("product factor b must be defined on 1..N");
    }
    std::vector<RowSpec> rows;
    rows.reserve(N * factors.size());
    for (std::size_t k = 1; k <= N; ++k)
        for (const auto& f : factors)
            rows.push_back(RowSpec::product(k, f.b[k], f.z));
    return PfeMatrix(std::move(rows), factors.size() <= 1 ? Layout::Form1 : Layout::Form2);
}

PfeMatrix collapse_form1(const PfeMatrix& m)
{
    std::vector<RowSpec> rows;
    std::map<std::size_t, std::size_t> slot;
    for (const auto& r : m.rows()) {
        const auto [it, inserted] = slot.try_emplace(r.step(), rows.size());
        if (inserted)
            rows.push_back(r);
        else
            rows[it->second].absorb(r);
    }
    return PfeMatrix(std::move(rows), Layout::Form1);
}

RowSpec exponential_row(const Rational& a, std::size_t power)
{
    if (power == 0)
        throw std::domain_error("exponential row needs a positive power");
    return RowSpec::explicit_row(power, {{power, a}});
}

Sequence constant_sequence(const Rational& value, std::size_t N)
{
    Sequence b(N + 1, value);
    b[0] = 0;
    return b;
}

namespace {

PfeMatrix single_factor(Rational z, Sequence b, std::size_t N)
{
    const ProductFactor f{std::move(z), std::move(b)};
    return build_product_matrix(std::span(&f, 1), N);
}

} // namespace

PfeMatrix partition_matrix(std::size_t N)
{
    return single_factor(1, constant_sequence(1, N), N);
}

PfeMatrix distinct_parts_matrix(std::size_t N)
{
    return single_factor(-1, constant_sequence(-1, N), N);
}

PfeMatrix odd_parts_matrix(std::size_t N)
{
    Sequence b(N + 1, Rational(0));
    for (std::size_t k = 1; k <= N; k += 2)
        b[k] = 1;
    return single_factor(1, std::move(b), N);
}

PfeMatrix parts_in_set_matrix(const std::set<std::size_t>& parts, std::size_t N)
{
    Sequence b(N + 1, Rational(0));
    for (const auto k : parts)
        if (k >= 1 && k <= N)
            b[k] = 1;
    return single_factor(1, std::move(b), N);
}

PfeMatrix colored_partition_matrix(const Rational& colors, std::size_t N)
{
    return single_factor(1, constant_sequence(colors, N), N);
}

PfeMatrix plane_partition_matrix(std::size_t N)
{
    Sequence b(N + 1, Rational(0));
    for (std::size_t k = 1; k <= N; ++k)
        b[k] = static_cast<unsigned long>(k);
    return single_factor(1, std::move(b), N);
}

PfeMatrix overpartition_matrix(std::size_t N)
{
    const std::vector<ProductFactor> factors{
        {Rational(-1), constant_sequence(-1, N)},
        {Rational(1), constant_sequence(1, N)},
    };
    return build_product_matrix(factors, N);
}

PfeMatrix jacobi_triple_product_matrix(const Rational& z, std::size_t N)
{
    if (z == 0)
        throw std::domain_error("Jacobi triple product needs z != 0");
    Sequence even(N + 1, Rational(0));
    Sequence odd(N + 1, Rational(0));
    for (std::size_t k = 1; k <= N; ++k)
        (k % 2 == 0 ? even : odd)[k] = -1;
    const std::vector<ProductFactor> factors{
        {Rational(1), even},
        {Rational(-z), odd},
        {Rational(-1 / z), odd},
    };
    return build_product_matrix(factors, N);
}

PfeMatrix symmetric_function_matrix(std::span<const Rational> x)
{
    std::vector<RowSpec> rows;
    for (const auto& xi : x)
        if (xi != 0)
            rows.push_back(RowSpec::product(1, 1, xi));
    return PfeMatrix(std::move(rows), rows.size() <= 1 ? Layout::Form1 : Layout::Form2);
}

PfeMatrix sine_product_matrix(std::size_t m)
{
    if (m == 0)
        throw std::domain_error("sine product needs m >= 1");
    std::vector<RowSpec> rows;
    for (std::size_t k = 1; k <= m; ++k)
        rows.push_back(RowSpec::product(1, -1, make_rational(1, Integer(static_cast<unsigned long>(k * k)))));
    return PfeMatrix(std::move(rows), m == 1 ? Layout::Form1 : Layout::Form2);
}

PfeMatrix gamma_product_matrix(std::size_t m)
{
    if (m == 0)
        throw std::domain_error("gamma product needs m >= 1");
    std::vector<RowSpec> rows;
    for (std::size_t k = 1; k <= m; ++k) {
        const Rational inv = make_rational(1, Integer(static_cast<unsigned long>(k)));
        auto row = RowSpec::product(1, -1, -inv);
        row.absorb(RowSpec::explicit_row(1, {{1, -inv}}));
        rows.push_back(std::move(row));
    }
    return PfeMatrix(std::move(rows), m == 1 ? Layout::Form1 : Layout::Form2);
}

} // namespace pfe
