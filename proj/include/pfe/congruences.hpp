#pragma once

// Congruence families P_r(p m + k) = 0 (mod p) for the coefficients of
// 1/(q;q)_inf^r. "= 0 (mod p)" for a rational value means v_p >= 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfe/arith.hpp"
#include "pfe/report.hpp"

namespace pfe {

struct CongruenceFamily {
    std::uint64_t modulus;
    /// n = modulus * m + residue.
    std::size_t residue;
    /// r must be congruent to this modulo `modulus`.
    long r_residue;
    /// The mod 3 families are stated for integer r only.
    bool integer_r_only;
    std::string_view description;
};

/// The four mod 5 families followed by the two mod 3 families.
const std::vector<CongruenceFamily>& congruence_families();

/// The registered family with this modulus and residue of n, if any.
const CongruenceFamily* find_family(std::uint64_t p, std::size_t k);

/// Empty when r satisfies the family's condition, otherwise the reason it does not.
/// For rational r the residue is read p-adically: v_p(r - c) >= 1.
std::optional<std::string> residue_violation(const CongruenceFamily& family, const Rational& r);

/// Checks v_p(P_r(p m + k)) >= 1 for 0 <= m <= M, with P_r generated by the
/// triangular-number recurrence. A failure records n = p m + k as its index.
/// Throws std::invalid_argument when r violates the family's condition.
IdentityReport check_family(const CongruenceFamily& family, const Rational& r, std::size_t M);

struct ScanCell {
    Rational r;
    std::size_t k;
    /// A registered family makes a claim about this cell.
    bool covered;
    bool passed;
    /// First failing m.
    std::optional<std::size_t> first_failure;
};

/// Verdicts of v_p(P_r(p m + k)) >= 1 for every r and every k in 1..p-1, m <= M.
/// Cells a family covers must pass; the rest are only reported.
std::vector<ScanCell> scan(std::uint64_t p, std::span<const Rational> rs, std::size_t M);

} // namespace pfe
