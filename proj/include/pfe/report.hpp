#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "pfe/arith.hpp"

namespace pfe {

/// Outcome of checking an identity coefficientwise over a window of indices.
struct IdentityReport {
    std::string name;
    std::size_t order = 0;
    bool passed = true;
    /// First index where the two sides differ, with the differing values.
    std::optional<std::size_t> first_failure;
    Rational lhs;
    Rational rhs;

    explicit operator bool() const { return passed; }

    /// Records a mismatch unless one has been recorded already.
    void fail(std::size_t index, const Rational& left, const Rational& right);

    /// Folds another report in: the combined report fails if either does and
    /// keeps the earliest failing index.
    void merge(const IdentityReport& other);
};

/// Compares lhs(n) against rhs(n) for every n in [first, last].
IdentityReport compare_sides(std::string name, std::size_t first, std::size_t last,
                             const std::function<Rational(std::size_t)>& lhs,
                             const std::function<Rational(std::size_t)>& rhs);

std::string describe(const IdentityReport& report);

} // namespace pfe
