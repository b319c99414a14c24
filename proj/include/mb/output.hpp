#pragma once

// Machine-readable encodings. Rationals go out as exact decimal strings
// ({"num":"...","den":"..."} in JSON, "num/den" or bare "num" in CSV);
// polynomials as coefficient lists ascending by power. Nothing is ever
// rendered as a float. Schema reference: docs/formats.md.

#include "mb/powersums.hpp"
#include "mb/rational.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace mb {

enum class OutputFormat { json, csv };
OutputFormat output_format_from_string(const std::string& s);

nlohmann::ordered_json to_json(const Rational& r);
nlohmann::ordered_json to_json(const Polynomial& p);
Rational rational_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

std::string csv_cell(const Rational& r);  // "3/4", "-1/2", "7"

struct OutputRecord {
    std::vector<std::pair<std::string, std::string>> params;  // insertion order kept
    std::string route;
    std::variant<Rational, Polynomial> value;
};

nlohmann::ordered_json to_json(const OutputRecord& rec);

// CSV rendering: one row for a rational value, one row per coefficient
// (with a trailing "power" param column) for a polynomial
std::string csv_header(const OutputRecord& rec);
std::vector<std::string> csv_rows(const OutputRecord& rec);

}  // namespace mb
