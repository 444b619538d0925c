#include <doctest.h>

#include <stdexcept>

#include "pfe/congruences.hpp"
#include "pfe/identities.hpp"

using namespace pfe;

namespace {

const CongruenceFamily& family(std::uint64_t p, std::size_t k)
{
    const auto* f = find_family(p, k);
    REQUIRE(f != nullptr);
    return *f;
}

} // namespace

TEST_CASE("six registered families")
{
    CHECK(congruence_families().size() == 6);
    CHECK(family(5, 4).r_residue == 1);
    CHECK(family(5, 1).r_residue == 0);
    CHECK(family(5, 2).r_residue == 2);
    CHECK(family(5, 3).r_residue == 4);
    CHECK(family(3, 2).integer_r_only);
    CHECK(find_family(5, 0) == nullptr);
    CHECK(find_family(7, 5) == nullptr);
}

TEST_CASE("partition numbers and tau mod 5")
{
    const auto& f = family(5, 4);
    CHECK(check_family(f, Rational(1), 10).passed);
    CHECK(check_family(f, Rational(-24), 10).passed);
    const auto p = named_series(SeriesName::partition, 9);
    CHECK(p[4] == 5);
    CHECK(p[9] == 30);
}

TEST_CASE("mod 5 families over representatives of each residue class")
{
    for (const auto& f : congruence_families()) {
        if (f.modulus != 5)
            continue;
        for (long shift : {0L, 5L, 10L, -5L, -10L}) {
            const Rational r(f.r_residue + shift);
            CAPTURE(f.residue);
            CAPTURE(to_string(r));
            CHECK(check_family(f, r, 60).passed);
        }
    }
    CHECK(check_family(family(5, 4), make_rational(1, 6), 60).passed);
    CHECK(check_family(family(5, 2), make_rational(11, 3), 60).passed);
}

TEST_CASE("mod 3 families")
{
    for (long r : {3L, -3L, 6L, -72L})
        for (std::size_t k : {1u, 2u})
            CHECK(check_family(family(3, k), Rational(r), 60).passed);
}

TEST_CASE("residue conditions are enforced")
{
    CHECK_THROWS_AS(check_family(family(5, 4), Rational(3), 10), std::invalid_argument);
    CHECK_THROWS_AS(check_family(family(5, 4), make_rational(1, 5), 10), std::invalid_argument);
    CHECK_THROWS_AS(check_family(family(3, 1), make_rational(3, 2), 10), std::invalid_argument);
    CHECK(residue_violation(family(5, 4), Rational(6)) == std::nullopt);
    CHECK(residue_violation(family(5, 4), Rational(2)).has_value());
}

TEST_CASE("scan marks covered cells")
{
    const std::vector<Rational> rs{Rational(1), Rational(6), Rational(-24), Rational(2), Rational(3)};
    const auto cells = scan(5, rs, 40);
    REQUIRE(cells.size() == rs.size() * 4);
    for (const auto& c : cells) {
        if (c.covered)
            CHECK(c.passed);
        if (c.k == 4 && (c.r == 1 || c.r == 6 || c.r == -24))
            CHECK(c.covered);
        if (c.k == 2 && c.r == 2)
            CHECK(c.covered);
        if (c.r == 3)
            CHECK_FALSE(c.covered);
    }
    // p(5m+1) is not always divisible by 5, so this uncovered cell fails.
    CHECK_FALSE(cells[0].passed);
    CHECK(cells[0].first_failure == 0);
}
