// pfe: command-line front end for the partition-frequency enumeration library.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfe/congruences.hpp"
#include "pfe/enumeration.hpp"
#include "pfe/identities.hpp"
#include "pfe/io.hpp"
#include "pfe/oracle.hpp"
#include "pfe/roots.hpp"

namespace {

using namespace pfe;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// Input problems that should end in exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t order = 0;
    bool order_given = false;
    std::string format;
    std::string field;
    std::string show;
    std::string input;
    std::string r, s, z, a, k, b, x, series;
    std::optional<std::size_t> m;
    std::optional<unsigned> t;
    std::optional<std::uint64_t> p;
    std::optional<std::size_t> family;
    std::size_t max_m = 40;
    std::optional<std::size_t> random_count;
    std::uint64_t seed = 20240601;
    bool list = false;
    std::string name;
};

std::optional<Rational> rational_option(const std::string& text, const char* flag)
{
    if (text.empty())
        return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("--") + flag + ": not a rational number: '" + text + "'");
    }
}

std::vector<Rational> list_option(const std::string& text, const char* flag)
{
    if (text.empty())
        return {};
    try {
        return io::parse_rational_list(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("--") + flag + ": expected comma-separated rationals, got '" + text + "'");
    }
}

unsigned positive_int_option(const std::optional<Rational>& value, const char* flag)
{
    if (!value || !is_integer(*value) || *value < 1 || *value > 64)
        throw UsageError(std::string("--") + flag + " must be an integer between 1 and 64");
    return static_cast<unsigned>(value->get_num().get_ui());
}

std::optional<io::Format> format_option(const Options& opt)
{
    if (opt.format.empty())
        return std::nullopt;
    auto f = io::parse_format(opt.format);
    if (!f)
        throw UsageError("--format must be json, bfile or csv");
    return f;
}

std::string read_input(const std::string& path)
{
    if (path.empty())
        throw UsageError("--input is required");
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

io::IndexedSequence read_sequence(const Options& opt, std::size_t first_index)
{
    try {
        return io::parse_sequence(read_input(opt.input), first_index, opt.field);
    } catch (const std::invalid_argument& e) {
        throw UsageError(opt.input + ": " + e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(opt.input + ": " + e.what());
    }
}

// Values 0..N from a sequence starting at `offset`, with the order flag applied.
std::vector<Rational> window(const io::IndexedSequence& seq, std::size_t offset, const Options& opt,
                             std::size_t& N)
{
    if (seq.values.empty())
        throw UsageError("input is empty");
    if (seq.offset != offset)
        throw UsageError("input must start at index " + std::to_string(offset) + ", not " +
                         std::to_string(seq.offset));
    const std::size_t available = seq.offset + seq.values.size() - 1;
    N = opt.order_given ? opt.order : available;
    if (N > available)
        throw UsageError("input stops at index " + std::to_string(available) + " but --order is " +
                         std::to_string(N));
    std::vector<Rational> out(N + 1, Rational(0));
    for (std::size_t n = offset; n <= N; ++n)
        out[n] = seq.values[n - offset];
    return out;
}

void emit(const io::OutputRecord& record, const Options& opt)
{
    const auto format = format_option(opt).value_or(io::Format::csv);
    std::cout << io::render(record, format, opt.show);
}

io::IndexedSequence slice(std::span<const Rational> values, std::size_t from)
{
    return {from, std::vector<Rational>(values.begin() + static_cast<std::ptrdiff_t>(from), values.end())};
}

int cmd_expand(const Options& opt)
{
    const std::size_t N = opt.order_given ? opt.order : 20;
    io::OutputRecord record;
    record.name = opt.name;
    record.order = N;

    if (opt.name == "product") {
        const Rational z = rational_option(opt.z, "z").value_or(1);
        auto pattern = list_option(opt.b, "b");
        if (pattern.empty())
            pattern = {Rational(1)};
        oracle::Factor factor{z, std::vector<Rational>(N + 1, Rational(0))};
        for (std::size_t k = 1; k <= N; ++k)
            factor.b[k] = pattern[(k - 1) % pattern.size()];
        record.params["z"] = z;
        const auto series = oracle::brute_expand(std::span(&factor, 1), N);
        record.coefficients = slice(series.coefficients(), 0);
        emit(record, opt);
        return exit_pass;
    }

    const auto name = parse_series_name(opt.name);
    if (!name) {
        std::string known = "product";
        for (const auto n : all_series_names())
            known += ", " + std::string(to_string(n));
        throw UsageError("unknown series '" + opt.name + "'; known: " + known);
    }
    NamedSeries spec;
    spec.name = *name;
    if (auto r = rational_option(opt.r, "r"))
        record.params["r"] = spec.r = *r;
    if (auto z = rational_option(opt.z, "z"))
        record.params["z"] = spec.z = *z;
    if (auto a = rational_option(opt.a, "a"))
        record.params["a"] = spec.a = *a;
    if (opt.m) {
        spec.m = *opt.m;
        record.params["m"] = Rational(static_cast<unsigned long>(*opt.m));
    }
    spec.x = list_option(opt.x, "x");
    const auto series = named_series(spec, N);
    record.coefficients = slice(series.coefficients(), 0);
    emit(record, opt);
    return exit_pass;
}

int cmd_to_product(const Options& opt)
{
    std::size_t N = 0;
    const auto P = window(read_sequence(opt, 0), 0, opt, N);
    if (P[0] != 1)
        throw UsageError("constant term must be 1, got " + to_string(P[0]));
    const auto rep = series_to_pfe(P, N);
    io::OutputRecord record;
    record.name = "to-product";
    record.order = N;
    record.coefficients = slice(rep.b, 1);
    record.sequences["P"] = slice(rep.P, 0);
    emit(record, opt);
    return exit_pass;
}

int cmd_from_g(const Options& opt)
{
    std::size_t N = 0;
    const auto g = window(read_sequence(opt, 1), 1, opt, N);
    const auto rep = g_to_pfe(g, N);
    io::OutputRecord record;
    record.name = "from-g";
    record.order = N;
    record.coefficients = slice(rep.P, 0);
    record.sequences["b"] = slice(rep.b, 1);
    record.sequences["g"] = slice(g, 1);
    emit(record, opt);
    return exit_pass;
}

int cmd_verify(const Options& opt)
{
    if (opt.list) {
        for (const auto& info : identity_catalog())
            std::cout << info.key << "  (default order " << info.default_order << ")  " << info.summary << '\n';
        return exit_pass;
    }
    const IdentityInfo* info = nullptr;
    for (const auto& candidate : identity_catalog())
        if (candidate.key == opt.name)
            info = &candidate;
    if (!info)
        throw UsageError("unknown identity '" + opt.name + "'; try 'verify --list'");

    VerifyParams params;
    params.r = rational_option(opt.r, "r");
    params.s = rational_option(opt.s, "s");
    params.z = rational_option(opt.z, "z");
    params.k = rational_option(opt.k, "k");
    params.m = opt.m;
    params.series = list_option(opt.series, "series");
    params.x = list_option(opt.x, "x");
    const std::size_t N = opt.order_given ? opt.order : info->default_order;

    IdentityReport report;
    try {
        report = verify(opt.name, params, N);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }

    if (format_option(opt) == io::Format::json) {
        std::cout << io::to_json(report).dump(2) << '\n';
    } else {
        std::cout << describe(report) << '\n';
    }
    return report.passed ? exit_pass : exit_fail;
}

int cmd_congruence(const Options& opt)
{
    if (!opt.p)
        throw UsageError("--p is required");
    auto rs = list_option(opt.r, "r");
    if (rs.empty())
        throw UsageError("--r is required");

    std::vector<ScanCell> cells;
    if (opt.family) {
        const auto* family = find_family(*opt.p, *opt.family);
        if (!family)
            throw UsageError("no congruence family mod " + std::to_string(*opt.p) + " with k = " +
                             std::to_string(*opt.family));
        for (const auto& r : rs) {
            if (auto why = residue_violation(*family, r))
                throw UsageError("family '" + std::string(family->description) + "' does not apply: " + *why);
            const auto report = check_family(*family, r, opt.max_m);
            std::optional<std::size_t> m;
            if (report.first_failure)
                m = (*report.first_failure - family->residue) / family->modulus;
            cells.push_back({r, family->residue, true, report.passed, m});
        }
    } else {
        try {
            cells = scan(*opt.p, rs, opt.max_m);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    bool ok = true;
    if (format_option(opt) == io::Format::json) {
        auto rows = nlohmann::json::array();
        for (const auto& c : cells) {
            rows.push_back({{"r", io::rational_json(c.r)},
                            {"k", c.k},
                            {"covered", c.covered},
                            {"passed", c.passed},
                            {"first_failure_m", c.first_failure ? nlohmann::json(*c.first_failure) : nlohmann::json()}});
        }
        std::cout << nlohmann::json{{"p", *opt.p}, {"max_m", opt.max_m}, {"cells", rows}}.dump(2) << '\n';
    } else {
        std::cout << "# P_r(" << *opt.p << "m+k) = 0 mod " << *opt.p << " for m <= " << opt.max_m << '\n';
        std::cout << "r,k,covered,verdict,first_failure_m\n";
        for (const auto& c : cells) {
            std::cout << to_string(c.r) << ',' << c.k << ',' << (c.covered ? "yes" : "no") << ','
                      << (c.passed ? "PASS" : "FAIL") << ','
                      << (c.first_failure ? std::to_string(*c.first_failure) : std::string("-")) << '\n';
        }
    }
    for (const auto& c : cells)
        if (c.covered && !c.passed)
            ok = false;
    return ok ? exit_pass : exit_fail;
}

int roots_random(const Options& opt)
{
    std::mt19937_64 rng(opt.seed);
    const std::size_t max_order = opt.order_given ? opt.order : 60;
    if (max_order == 0)
        throw UsageError("--order must be positive");
    const std::uint64_t primes[] = {2, 3, 5, 7};
    std::uniform_int_distribution<int> pick_prime(0, 3);
    std::uniform_int_distribution<unsigned> pick_r(1, 4);
    std::uniform_int_distribution<std::size_t> pick_n(1, max_order);

    std::size_t failures = 0;
    for (std::size_t i = 0; i < *opt.random_count; ++i) {
        const auto p = primes[pick_prime(rng)];
        const auto r = pick_r(rng);
        const auto N = pick_n(rng);
        const auto s = std::uniform_int_distribution<unsigned>(0, r - 1)(rng);
        Integer modulus;
        mpz_ui_pow_ui(modulus.get_mpz_t(), p, r);
        const auto P = random_divisible_series(rng, modulus, N, 20);

        const auto integrality = integrality_check(P, N);
        const auto divisibility = prime_power_divisibility(P, p, r, N);
        const auto root = root_integrality(P, Integer(static_cast<unsigned long>(p)), r, s, N);
        if (!integrality.agree() || !divisibility.passed() || !root.all_integral) {
            ++failures;
            std::cout << "FAIL instance " << i << ": p = " << p << ", r = " << r << ", s = " << s << ", N = " << N
                      << '\n';
        }
    }
    std::cout << "random instances: " << *opt.random_count << ", failures: " << failures << ", seed: " << opt.seed
              << '\n';
    return failures == 0 ? exit_pass : exit_fail;
}

int cmd_roots_check(const Options& opt)
{
    if (opt.random_count)
        return roots_random(opt);

    std::size_t N = 0;
    const auto P = window(read_sequence(opt, 0), 0, opt, N);
    if (P[0] != 1)
        throw UsageError("constant term must be 1, got " + to_string(P[0]));

    bool ok = true;
    const auto integrality = integrality_check(P, N);
    std::cout << "coefficients integral: " << (integrality.coefficients_integral ? "yes" : "no") << '\n';
    std::cout << "exponents integral: " << (integrality.exponents_integral ? "yes" : "no") << '\n';
    ok = ok && integrality.agree();

    if (opt.p) {
        const auto r = positive_int_option(rational_option(opt.r, "r"), "r");
        if (!is_prime(*opt.p))
            throw UsageError("--p must be prime");
        const auto report = prime_power_divisibility(P, *opt.p, r, N);
        std::cout << "divisibility by " << *opt.p << "^" << r << ": ";
        if (!report.hypothesis_holds()) {
            std::cout << "hypothesis fails at n = " << *report.hypothesis_failure << '\n';
        } else if (report.counterexample) {
            std::cout << "FAIL at m = " << *report.counterexample << '\n';
            ok = false;
        } else {
            std::cout << "PASS (order " << N << ")\n";
        }
    }

    if (opt.m) {
        if (!opt.t)
            throw UsageError("--t is required with --m");
        const auto s = rational_option(opt.s, "s").value_or(0);
        if (!is_integer(s) || s < 0)
            throw UsageError("--s must be a non-negative integer");
        RootResult root;
        try {
            root = root_integrality(P, Integer(static_cast<unsigned long>(*opt.m)), *opt.t,
                                    static_cast<unsigned>(s.get_num().get_ui()), N);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << "root integral: " << (root.all_integral ? "yes" : "no") << '\n';
        ok = ok && root.all_integral;
        if (format_option(opt)) {
            io::OutputRecord record;
            record.name = "root";
            record.order = N;
            record.params["m"] = Rational(static_cast<unsigned long>(*opt.m));
            record.params["s"] = s;
            record.coefficients = slice(root.root.coefficients(), 0);
            emit(record, opt);
        }
    }
    return ok ? exit_pass : exit_fail;
}

void add_order(CLI::App* cmd, Options& opt)
{
    cmd->add_option("-n,--order", opt.order, "Truncation order N")->each([&](const std::string&) {
        opt.order_given = true;
    });
}

void add_format(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "json, bfile or csv");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact partition-type series, product exponents and identity checks"};
    app.require_subcommand(1);
    Options opt;
    std::function<int(const Options&)> run;

    auto* expand = app.add_subcommand("expand", "Print the coefficients of a named series");
    expand->add_option("name", opt.name, "Series name, or 'product' for prod (1 - z q^k)^(-b_k)")->required();
    add_order(expand, opt);
    add_format(expand, opt);
    expand->add_option("--r", opt.r, "Exponent");
    expand->add_option("--z", opt.z, "Variable z");
    expand->add_option("--a", opt.a, "Scale in exp(a q)");
    expand->add_option("--m", opt.m, "Number of factors");
    expand->add_option("--x", opt.x, "Comma-separated variables for 'symmetric'");
    expand->add_option("--b", opt.b, "Comma-separated exponents b_1, b_2, ..., repeated cyclically");
    expand->callback([&] { run = cmd_expand; });

    auto* to_product = app.add_subcommand("to-product", "Recover b_k from P(0..N)");
    to_product->add_option("--input", opt.input, "Series file, or - for stdin");
    to_product->add_option("--field", opt.field, "Sequence to read from JSON input");
    to_product->add_option("--show", opt.show, "Extra sequence to write instead of the primary one (bfile, csv)");
    add_order(to_product, opt);
    add_format(to_product, opt);
    to_product->callback([&] { run = cmd_to_product; });

    auto* from_g = app.add_subcommand("from-g", "Build P and b from g(1..N)");
    from_g->add_option("--input", opt.input, "g file, or - for stdin");
    from_g->add_option("--field", opt.field, "Sequence to read from JSON input");
    from_g->add_option("--show", opt.show, "Extra sequence to write instead of the primary one (bfile, csv)");
    add_order(from_g, opt);
    add_format(from_g, opt);
    from_g->callback([&] { run = cmd_from_g; });

    auto* verify_cmd = app.add_subcommand("verify", "Check a registered identity");
    verify_cmd->add_option("key", opt.name, "Identity key");
    verify_cmd->add_flag("--list", opt.list, "List identity keys");
    add_order(verify_cmd, opt);
    add_format(verify_cmd, opt);
    verify_cmd->add_option("--r", opt.r);
    verify_cmd->add_option("--s", opt.s);
    verify_cmd->add_option("--z", opt.z);
    verify_cmd->add_option("--k", opt.k);
    verify_cmd->add_option("--m", opt.m);
    verify_cmd->add_option("--series", opt.series, "Comma-separated Q(0..) for pr_ps");
    verify_cmd->add_option("--x", opt.x, "Comma-separated variables for newton_symmetric");
    verify_cmd->callback([&] { run = cmd_verify; });

    auto* congruence = app.add_subcommand("congruence", "Check P_r(pm + k) = 0 mod p");
    congruence->add_option("--p", opt.p, "5 or 3")->required();
    congruence->add_option("--r", opt.r, "Comma-separated exponents r")->required();
    congruence->add_option("--family", opt.family, "Residue k of n; omit to scan every k");
    congruence->add_option("--max-m", opt.max_m, "Largest m checked");
    add_format(congruence, opt);
    congruence->callback([&] { run = cmd_congruence; });

    auto* roots = app.add_subcommand("roots-check", "Integrality of b_k and of roots of a series");
    roots->add_option("--input", opt.input, "Series file, or - for stdin");
    add_order(roots, opt);
    add_format(roots, opt);
    roots->add_option("--p", opt.p, "Prime for the divisibility check");
    roots->add_option("--r", opt.r, "Power of p dividing every P(n), n >= 1");
    roots->add_option("--m", opt.m, "Root base m");
    roots->add_option("--t", opt.t, "Power of m dividing every P(n), n >= 1");
    roots->add_option("--s", opt.s, "Take the m^s-th root, s < t");
    roots->add_option("--random", opt.random_count, "Check this many random instances instead");
    roots->add_option("--seed", opt.seed, "Seed for --random");
    roots->callback([&] { run = cmd_roots_check; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        return run(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
