#pragma once

// Brute-force ground truth. Nothing here calls the enumeration engine or the
// series power routines; values come straight from the defining sums over
// partitions and from naive product expansion.

#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "pfe/arith.hpp"
#include "pfe/series.hpp"

namespace pfe::oracle {

/// A partition as part size -> multiplicity, sorted by decreasing part size.
class PartitionFrequencyVector {
public:
    using Entry = std::pair<std::size_t, std::size_t>;

    const std::vector<Entry>& entries() const { return entries_; }

    /// Multiplicity of part k (0 when absent).
    std::size_t multiplicity(std::size_t k) const;

    /// sum_k k f_k.
    std::size_t weight() const;
    std::size_t part_count() const;

    std::vector<Entry>& mutable_entries() { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// Iterates over the partitions of n, largest part first in reverse
/// lexicographic order: [n], [n-1, 1], ..., [1, ..., 1]. n = 0 yields the
/// single empty partition.
class PartitionRange {
public:
    explicit PartitionRange(std::size_t n) : n_(n) {}

    class iterator {
    public:
        using value_type = PartitionFrequencyVector;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::size_t n);

        const PartitionFrequencyVector& operator*() const { return current_; }
        const PartitionFrequencyVector* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        void refresh();

        std::vector<std::size_t> parts_;
        PartitionFrequencyVector current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::size_t n_;
};

inline PartitionRange enumerate_partitions(std::size_t n) { return PartitionRange(n); }

/// Number of partitions of n satisfying a predicate on the part list.
std::size_t count_partitions_if(std::size_t n, const std::function<bool(const PartitionFrequencyVector&)>& pred);

/// Partitions of n whose parts differ pairwise by at least `gap` (gap 2 is the
/// Rogers-Ramanujan condition).
std::size_t gap_partition_count(std::size_t n, std::size_t gap);

/// P(n) = sum over partitions of n of prod_i (b_i)_{r_i} / r_i! z^{r_i}. b is 1-based.
Rational p_direct(std::size_t n, std::span<const Rational> b, const Rational& z);

/// F_k(n) = the same sum over partitions containing k, weighted by r_k.
Rational f_direct(std::size_t k, std::size_t n, std::span<const Rational> b, const Rational& z);

/// P(n) and F_1(n), ..., F_n(n) in a single pass over the partitions of n.
struct DirectColumn {
    Rational P;
    /// F[k] for k = 1..n; F[0] unused.
    std::vector<Rational> F;
};
DirectColumn direct_column(std::size_t n, std::span<const Rational> b, const Rational& z);

/// One factor prod_k (1 - z q^k)^{-b_k}.
struct Factor {
    Rational z;
    std::vector<Rational> b;
};

/// Multiplies out each factor's binomial expansion
/// sum_r (b_k)_r / r! z^r q^{kr} for k <= N.
TruncatedSeries brute_expand(std::span<const Factor> factors, std::size_t N);

} // namespace pfe::oracle
