#include "pfe/report.hpp"

#include <utility>

namespace pfe {

void IdentityReport::fail(std::size_t index, const Rational& left, const Rational& right)
{
    passed = false;
    if (first_failure && *first_failure <= index)
        return;
    first_failure = index;
    lhs = left;
    rhs = right;
}

void IdentityReport::merge(const IdentityReport& other)
{
    if (!other.passed && other.first_failure)
        fail(*other.first_failure, other.lhs, other.rhs);
    else if (!other.passed)
        passed = false;
}

IdentityReport compare_sides(std::string name, std::size_t first, std::size_t last,
                             const std::function<Rational(std::size_t)>& lhs,
                             const std::function<Rational(std::size_t)>& rhs)
{
    IdentityReport report;
    report.name = std::move(name);
    report.order = last;
    for (std::size_t n = first; n <= last; ++n) {
        const auto l = lhs(n);
        const auto r = rhs(n);
        if (l != r) {
            report.fail(n, l, r);
            break;
        }
    }
    return report;
}

std::string describe(const IdentityReport& report)
{
    std::string out = report.name + ": ";
    if (report.passed)
        return out + "PASS (order " + std::to_string(report.order) + ")";
    out += "FAIL (order " + std::to_string(report.order) + ")";
    if (report.first_failure)
        out += " at n = " + std::to_string(*report.first_failure) + ": " + to_string(report.lhs) +
               " != " + to_string(report.rhs);
    return out;
}

} // namespace pfe
