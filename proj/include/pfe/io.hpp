#pragma once

// Output records and the text formats used by the command-line tool.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfe/arith.hpp"
#include "pfe/report.hpp"

namespace pfe::io {

/// A sequence whose first value sits at index `offset`.
struct IndexedSequence {
    std::size_t offset = 0;
    std::vector<Rational> values;
};

struct OutputRecord {
    std::string name;
    std::map<std::string, Rational> params;
    std::size_t order = 0;
    /// The primary sequence.
    IndexedSequence coefficients;
    /// Further named sequences (b next to P, say). Only json carries them;
    /// bfile and csv write whichever sequence is selected.
    std::map<std::string, IndexedSequence> sequences;
    std::optional<IdentityReport> report;
};

enum class Format { json, bfile, csv };

std::optional<Format> parse_format(std::string_view text);

/// [num, den] with both parts as decimal strings.
nlohmann::json rational_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const OutputRecord& record);

/// Renders a record. `field` picks a sequence from `sequences` for bfile and
/// csv; empty means the primary one. bfile throws std::domain_error on any
/// non-integer value, and both throw std::invalid_argument for unknown fields.
std::string render(const OutputRecord& record, Format format, std::string_view field = {});

/// Parses a series file. Each non-blank line is "n value" or "value"; values
/// are integers or a/b; '#' starts a comment. Lines without an index count up
/// from `first_index`. Indices must be consecutive. A JSON record (text
/// starting with '{') is accepted too, `field` selecting a sequence as in
/// render().
IndexedSequence parse_sequence(std::string_view text, std::size_t first_index, std::string_view field = {});

/// Comma-separated rationals, e.g. "1,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

} // namespace pfe::io
