#include "pfe/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfe::oracle {

std::size_t PartitionFrequencyVector::multiplicity(std::size_t k) const
{
    for (const auto& [part, mult] : entries_)
        if (part == k)
            return mult;
    return 0;
}

std::size_t PartitionFrequencyVector::weight() const
{
    std::size_t total = 0;
    for (const auto& [part, mult] : entries_)
        total += part * mult;
    return total;
}

std::size_t PartitionFrequencyVector::part_count() const
{
    std::size_t total = 0;
    for (const auto& e : entries_)
        total += e.second;
    return total;
}

PartitionRange::iterator::iterator(std::size_t n) : done_(false)
{
    if (n > 0)
        parts_.push_back(n);
    refresh();
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    // Rightmost part larger than 1; everything after it is a run of 1s.
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1)
        --i;
    if (i == 0) {
        done_ = true;
        return *this;
    }
    --i;
    // The trailing 1s plus the unit taken from parts_[i] are redistributed
    // greedily in parts no larger than the decremented part.
    std::size_t rest = parts_.size() - i;
    const std::size_t cap = --parts_[i];
    parts_.resize(i + 1);
    while (rest > 0) {
        const auto part = std::min(cap, rest);
        parts_.push_back(part);
        rest -= part;
    }
    refresh();
    return *this;
}

void PartitionRange::iterator::refresh()
{
    auto& entries = current_.mutable_entries();
    entries.clear();
    for (const auto part : parts_) {
        if (!entries.empty() && entries.back().first == part)
            ++entries.back().second;
        else
            entries.emplace_back(part, 1);
    }
}

std::size_t count_partitions_if(std::size_t n, const std::function<bool(const PartitionFrequencyVector&)>& pred)
{
    std::size_t count = 0;
    for (const auto& p : enumerate_partitions(n))
        if (pred(p))
            ++count;
    return count;
}

std::size_t gap_partition_count(std::size_t n, std::size_t gap)
{
    return count_partitions_if(n, [gap](const PartitionFrequencyVector& p) {
        const auto& e = p.entries();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (gap > 0 && e[i].second > 1)
                return false;
            if (i + 1 < e.size() && e[i].first - e[i + 1].first < gap)
                return false;
        }
        return true;
    });
}

namespace {

// weight[i][r] = (b_i)_r / r! z^r for 1 <= i <= n, 0 <= r <= n / i.
class WeightTable {
public:
    WeightTable(std::size_t n, std::span<const Rational> b, const Rational& z) : table_(n + 1)
    {
        if (b.size() < n + 1)
            throw std::invalid_argument("oracle: b must be defined on 1..n");
        for (std::size_t i = 1; i <= n; ++i) {
            auto& row = table_[i];
            row.push_back(Rational(1));
            for (std::size_t r = 1; r <= n / i; ++r) {
                // (b)_r / r! = (b)_{r-1} / (r-1)! * (b + r - 1) / r
                row.push_back(row.back() * (b[i] + static_cast<unsigned long>(r - 1)) * z /
                              static_cast<unsigned long>(r));
            }
        }
    }

    Rational weight(const PartitionFrequencyVector& p) const
    {
        Rational w = 1;
        for (const auto& [part, mult] : p.entries())
            w *= table_[part][mult];
        return w;
    }

private:
    std::vector<std::vector<Rational>> table_;
};

} // namespace

Rational p_direct(std::size_t n, std::span<const Rational> b, const Rational& z)
{
    const WeightTable table(n, b, z);
    Rational total = 0;
    for (const auto& p : enumerate_partitions(n))
        total += table.weight(p);
    return total;
}

Rational f_direct(std::size_t k, std::size_t n, std::span<const Rational> b, const Rational& z)
{
    if (k == 0 || k > n)
        throw std::domain_error("f_direct needs 1 <= k <= n");
    const WeightTable table(n, b, z);
    Rational total = 0;
    for (const auto& p : enumerate_partitions(n)) {
        const auto r = p.multiplicity(k);
        if (r > 0)
            total += static_cast<unsigned long>(r) * table.weight(p);
    }
    return total;
}

DirectColumn direct_column(std::size_t n, std::span<const Rational> b, const Rational& z)
{
    const WeightTable table(n, b, z);
    DirectColumn out{Rational(0), std::vector<Rational>(n + 1, Rational(0))};
    for (const auto& p : enumerate_partitions(n)) {
        const auto w = table.weight(p);
        out.P += w;
        for (const auto& [part, mult] : p.entries())
            out.F[part] += static_cast<unsigned long>(mult) * w;
    }
    return out;
}

TruncatedSeries brute_expand(std::span<const Factor> factors, std::size_t N)
{
    std::vector<Rational> acc(N + 1, Rational(0));
    acc[0] = 1;
    std::vector<Rational> next(N + 1);
    for (const auto& f : factors) {
        if (f.b.size() < N + 1)
            throw std::invalid_argument("brute_expand: b must be defined on 1..N");
        for (std::size_t k = 1; k <= N; ++k) {
            if (f.b[k] == 0)
                continue;
            // Binomial series of (1 - z q^k)^{-b_k}.
            std::vector<Rational> binom{Rational(1)};
            for (std::size_t r = 1; r * k <= N; ++r)
                binom.push_back(binom.back() * (f.b[k] + static_cast<unsigned long>(r - 1)) * f.z /
                                static_cast<unsigned long>(r));
            for (std::size_t n = 0; n <= N; ++n) {
                next[n] = 0;
                for (std::size_t r = 0; r * k <= n; ++r)
                    next[n] += binom[r] * acc[n - r * k];
            }
            acc.swap(next);
        }
    }
    return TruncatedSeries(std::move(acc));
}

} // namespace pfe::oracle
