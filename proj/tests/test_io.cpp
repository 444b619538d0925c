#include <doctest.h>

#include <stdexcept>

#include "pfe/io.hpp"

using namespace pfe;

namespace {

io::OutputRecord sample()
{
    io::OutputRecord r;
    r.name = "demo";
    r.order = 2;
    r.params["r"] = make_rational(-1, 2);
    r.coefficients = {0, {Rational(1), make_rational(1, 2), Rational(Integer("123456789012345678901234567890"))}};
    r.sequences["b"] = {1, {Rational(3), Rational(-4)}};
    return r;
}

} // namespace

TEST_CASE("json output keeps exact values")
{
    const auto j = io::to_json(sample());
    CHECK(j["name"] == "demo");
    CHECK(j["order"] == 2);
    CHECK(j["params"]["r"] == nlohmann::json::array({"-1", "2"}));
    CHECK(j["coefficients"][2][0] == "123456789012345678901234567890");
    CHECK(j["coefficients"][2][1] == "1");
    CHECK(j["sequences"]["b"]["offset"] == 1);

    const auto text = io::render(sample(), io::Format::json);
    const auto back = io::parse_sequence(text, 0);
    CHECK(back.offset == 0);
    CHECK(back.values == sample().coefficients.values);
    const auto b = io::parse_sequence(text, 0, "b");
    CHECK(b.offset == 1);
    CHECK(b.values == sample().sequences["b"].values);
    CHECK_THROWS(io::parse_sequence(text, 0, "missing"));
}

TEST_CASE("csv and bfile output")
{
    CHECK(io::render(sample(), io::Format::csv) ==
          "n,numerator,denominator\n0,1,1\n1,1,2\n2,123456789012345678901234567890,1\n");
    CHECK_THROWS_AS(io::render(sample(), io::Format::bfile), std::domain_error);
    CHECK(io::render(sample(), io::Format::bfile, "b") == "1 3\n2 -4\n");
    CHECK_THROWS_AS(io::render(sample(), io::Format::csv, "x"), std::invalid_argument);

    auto with_report = sample();
    with_report.report = IdentityReport{};
    with_report.report->name = "demo";
    with_report.report->order = 2;
    CHECK(io::render(with_report, io::Format::bfile, "b") == "1 3\n2 -4\n# demo: PASS (order 2)\n");
}

TEST_CASE("format names")
{
    CHECK(io::parse_format("json") == io::Format::json);
    CHECK(io::parse_format("bfile") == io::Format::bfile);
    CHECK(io::parse_format("csv") == io::Format::csv);
    CHECK_FALSE(io::parse_format("xml"));
}

TEST_CASE("text sequence input")
{
    const auto plain = io::parse_sequence("# header\n1\n-2/4\n\n3 # trailing\n", 0);
    CHECK(plain.offset == 0);
    CHECK(plain.values == std::vector<Rational>{Rational(1), make_rational(-1, 2), Rational(3)});

    const auto indexed = io::parse_sequence("1 5\n2 7\n3 -1/3\n", 0);
    CHECK(indexed.offset == 1);
    CHECK(indexed.values.size() == 3);

    CHECK(io::parse_sequence("4\n5\n", 1).offset == 1);
    CHECK(io::parse_sequence("", 0).values.empty());

    CHECK_THROWS_AS(io::parse_sequence("1 5\n3 7\n", 0), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence("1 2 3\n", 0), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence("x\n", 0), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence("-1 4\n", 0), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence("1\n", 0, "b"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_sequence("{ not json", 0), std::invalid_argument);
}

TEST_CASE("rational lists")
{
    CHECK(io::parse_rational_list("1, -1/2,3") ==
          std::vector<Rational>{Rational(1), make_rational(-1, 2), Rational(3)});
    CHECK_THROWS_AS(io::parse_rational_list("1,,2"), std::invalid_argument);
    CHECK(io::rational_from_json(nlohmann::json::array({"6", "4"})) == make_rational(3, 2));
    CHECK(io::rational_from_json(nlohmann::json(5)) == 5);
    CHECK_THROWS_AS(io::rational_from_json(nlohmann::json::object()), std::invalid_argument);
}
