#include "pfe/io.hpp"

#include <sstream>
#include <stdexcept>

namespace pfe::io {

std::optional<Format> parse_format(std::string_view text)
{
    if (text == "json")
        return Format::json;
    if (text == "bfile")
        return Format::bfile;
    if (text == "csv")
        return Format::csv;
    return std::nullopt;
}

nlohmann::json rational_json(const Rational& x)
{
    return nlohmann::json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
        return parse_rational(j[0].get<std::string>() + "/" + j[1].get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as [num, den], got " + j.dump());
}

nlohmann::json to_json(const IdentityReport& report)
{
    nlohmann::json j{{"name", report.name}, {"order", report.order}, {"passed", report.passed}};
    if (report.first_failure) {
        j["first_failure"] = *report.first_failure;
        j["lhs"] = rational_json(report.lhs);
        j["rhs"] = rational_json(report.rhs);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

namespace {

nlohmann::json sequence_json(const IndexedSequence& s)
{
    auto values = nlohmann::json::array();
    for (const auto& x : s.values)
        values.push_back(rational_json(x));
    return values;
}

const IndexedSequence& select(const OutputRecord& record, std::string_view field)
{
    if (field.empty())
        return record.coefficients;
    const auto it = record.sequences.find(std::string(field));
    if (it == record.sequences.end())
        throw std::invalid_argument("record has no sequence named '" + std::string(field) + "'");
    return it->second;
}

IndexedSequence sequence_from_json(const nlohmann::json& j, std::size_t offset)
{
    IndexedSequence out{offset, {}};
    for (const auto& x : j)
        out.values.push_back(rational_from_json(x));
    return out;
}

IndexedSequence parse_json_sequence(std::string_view text, std::string_view field)
{
    const auto j = nlohmann::json::parse(text);
    if (field.empty())
        return sequence_from_json(j.at("coefficients"), j.value("offset", std::size_t{0}));
    const auto& s = j.at("sequences").at(std::string(field));
    return sequence_from_json(s.at("values"), s.at("offset").get<std::size_t>());
}

} // namespace

nlohmann::json to_json(const OutputRecord& record)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : record.params)
        params[key] = rational_json(value);

    nlohmann::json j{{"name", record.name},
                     {"params", params},
                     {"order", record.order},
                     {"offset", record.coefficients.offset},
                     {"coefficients", sequence_json(record.coefficients)}};
    if (!record.sequences.empty()) {
        nlohmann::json extra = nlohmann::json::object();
        for (const auto& [key, s] : record.sequences)
            extra[key] = {{"offset", s.offset}, {"values", sequence_json(s)}};
        j["sequences"] = extra;
    }
    if (record.report)
        j["report"] = to_json(*record.report);
    return j;
}

std::string render(const OutputRecord& record, Format format, std::string_view field)
{
    if (format == Format::json)
        return to_json(record).dump(2) + "\n";

    const auto& s = select(record, field);
    std::ostringstream out;
    if (format == Format::csv)
        out << "n,numerator,denominator\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const auto n = s.offset + i;
        const auto& x = s.values[i];
        if (format == Format::csv) {
            out << n << ',' << x.get_num().get_str() << ',' << x.get_den().get_str() << '\n';
        } else {
            if (!is_integer(x))
                throw std::domain_error("bfile output needs integers, but entry " + std::to_string(n) + " is " +
                                        to_string(x));
            out << n << ' ' << x.get_num().get_str() << '\n';
        }
    }
    if (record.report)
        out << "# " << describe(*record.report) << '\n';
    return out.str();
}

IndexedSequence parse_sequence(std::string_view text, std::size_t first_index, std::string_view field)
{
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{') {
        try {
            return parse_json_sequence(text, field);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
        }
    }
    if (!field.empty())
        throw std::invalid_argument("field selection needs JSON input");

    IndexedSequence out{first_index, {}};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty())
            continue;
        if (tokens.size() > 2)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n value' or 'value'");

        const auto expected = out.offset + out.values.size();
        if (tokens.size() == 2) {
            std::size_t index = 0;
            try {
                std::size_t used = 0;
                index = std::stoull(tokens[0], &used);
                if (used != tokens[0].size() || tokens[0][0] == '-')
                    throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad index '" + tokens[0] + "'");
            }
            if (out.values.empty())
                out.offset = index;
            else if (index != expected)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                            " out of sequence, expected " + std::to_string(expected));
        }
        try {
            out.values.push_back(parse_rational(tokens.back()));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad value '" + tokens.back() + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        out.push_back(parse_rational(item));
        pos = comma + 1;
    }
    return out;
}

} // namespace pfe::io
