#pragma once

// Partition-frequency enumeration (PFE) matrices.
//
// A matrix is a finite list of rows. Row i carries a step index k (its weight
// in the column-sum identity) and an implicit sparse entry sequence a_i(j),
// j >= 1. Rows are never stored densely: a row is a sum of geometric terms
//
//     a(j) = sum_t b_t z_t^r   when j = r k,
//
// plus an optional finite map of explicit entries j -> value. A single
// geometric term is the row of one factor (1 - z q^k)^{-b_k}; several terms
// at the same step appear after collapsing a product of factors.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pfe/arith.hpp"

namespace pfe {

struct GeometricTerm {
    Rational b;
    Rational z;

    friend bool operator==(const GeometricTerm&, const GeometricTerm&) = default;
};

class RowSpec {
public:
    /// Row of (1 - z q^step)^{-b}: entries b z^r at columns r * step.
    /// Throws std::domain_error for z = 0 or step = 0.
    static RowSpec product(std::size_t step, Rational b, Rational z);

    /// Row with explicitly listed entries; column 0 is rejected.
    static RowSpec explicit_row(std::size_t step, std::map<std::size_t, Rational> entries);

    std::size_t step() const { return step_; }

    /// Exactly one geometric term and no explicit entries.
    bool is_product() const { return terms_.size() == 1 && explicit_.empty(); }

    const std::vector<GeometricTerm>& terms() const { return terms_; }
    const std::map<std::size_t, Rational>& explicit_entries() const { return explicit_; }

    Rational entry(std::size_t column) const;

    /// Nonzero entries in columns 1..N, in increasing column order.
    std::vector<std::pair<std::size_t, Rational>> entries(std::size_t N) const;

    /// Adds the entries of a row with the same step into this one.
    void absorb(const RowSpec& other);

    friend bool operator==(const RowSpec&, const RowSpec&) = default;

private:
    RowSpec() = default;

    std::size_t step_ = 1;
    std::vector<GeometricTerm> terms_;
    std::map<std::size_t, Rational> explicit_;
};

enum class Layout {
    /// One row per step index.
    Form1,
    /// One row per factor per step index.
    Form2,
};

class PfeMatrix {
public:
    /// Form1 requires pairwise distinct step indices (std::invalid_argument otherwise).
    PfeMatrix(std::vector<RowSpec> rows, Layout layout);

    const std::vector<RowSpec>& rows() const { return rows_; }
    Layout layout() const { return layout_; }

    /// Sum over rows with the given step of the entry at `column`.
    Rational step_column_entry(std::size_t step, std::size_t column) const;

    friend bool operator==(const PfeMatrix&, const PfeMatrix&) = default;

private:
    std::vector<RowSpec> rows_;
    Layout layout_;
};

/// One factor prod_k (1 - z q^k)^{-b_k}; b is 1-based.
struct ProductFactor {
    Rational z;
    Sequence b;
};

/// Rows for steps 1..N, one per factor per step (interleaved by step). A
/// single factor yields a Form1 matrix, several factors a Form2 matrix.
PfeMatrix build_product_matrix(std::span<const ProductFactor> factors, std::size_t N);

/// Merges all rows sharing a step into one row.
PfeMatrix collapse_form1(const PfeMatrix& m);

/// Row for exp(a q^power): a single explicit entry a at column `power`,
/// step index `power`.
RowSpec exponential_row(const Rational& a, std::size_t power);

/// Constant sequence b_k = value on 1..N.
Sequence constant_sequence(const Rational& value, std::size_t N);

// Presets for the classical partition-type families.
PfeMatrix partition_matrix(std::size_t N);
PfeMatrix distinct_parts_matrix(std::size_t N);
PfeMatrix odd_parts_matrix(std::size_t N);
PfeMatrix parts_in_set_matrix(const std::set<std::size_t>& parts, std::size_t N);
PfeMatrix colored_partition_matrix(const Rational& colors, std::size_t N);
PfeMatrix plane_partition_matrix(std::size_t N);
PfeMatrix overpartition_matrix(std::size_t N);

/// Product side of Jacobi's triple product, (q^2, -zq, -q/z; q^2)_inf, as three factors.
PfeMatrix jacobi_triple_product_matrix(const Rational& z, std::size_t N);

/// prod_i 1/(1 - x_i q): one step-1 row per nonzero variable.
PfeMatrix symmetric_function_matrix(std::span<const Rational> x);

/// prod_{k=1}^{m} (1 - x/k^2), in the variable x.
PfeMatrix sine_product_matrix(std::size_t m);

/// prod_{k=1}^{m} (1 + x/k) exp(-x/k): one step-1 row per k with entries
/// [0, -1/k^2, 1/k^3, ...], the row of (1 + x/k) plus -1/k in column 1.
PfeMatrix gamma_product_matrix(std::size_t m);

} // namespace pfe
