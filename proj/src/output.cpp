#include "mb/output.hpp"

#include <stdexcept>

namespace mb {

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "' (json|csv)");
}

nlohmann::ordered_json to_json(const Rational& r) {
    return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

nlohmann::ordered_json to_json(const Polynomial& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_json(p.coeff(i)));
    return {{"coeffs", coeffs}};
}

Rational rational_from_json(const nlohmann::json& j) {
    return Rational(Integer(j.at("num").get<std::string>()),
                    Integer(j.at("den").get<std::string>()));
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

std::string csv_cell(const Rational& r) { return r.str(); }

nlohmann::ordered_json to_json(const OutputRecord& rec) {
    nlohmann::ordered_json params;
    for (const auto& [key, val] : rec.params) params[key] = val;
    nlohmann::ordered_json out;
    out["params"] = std::move(params);
    out["route"] = rec.route;
    if (std::holds_alternative<Rational>(rec.value))
        out["value"] = to_json(std::get<Rational>(rec.value));
    else
        out["value"] = to_json(std::get<Polynomial>(rec.value));
    return out;
}

std::string csv_header(const OutputRecord& rec) {
    std::string h;
    for (const auto& [key, val] : rec.params) h += key + ",";
    if (std::holds_alternative<Polynomial>(rec.value)) h += "power,";
    return h + "route,value";
}

std::vector<std::string> csv_rows(const OutputRecord& rec) {
    std::string prefix;
    for (const auto& [key, val] : rec.params) prefix += val + ",";
    std::vector<std::string> rows;
    if (std::holds_alternative<Rational>(rec.value)) {
        rows.push_back(prefix + rec.route + "," + csv_cell(std::get<Rational>(rec.value)));
    } else {
        const Polynomial& p = std::get<Polynomial>(rec.value);
        int top = std::max(p.degree(), 0);
        for (int i = 0; i <= top; ++i)
            rows.push_back(prefix + std::to_string(i) + "," + rec.route + "," + csv_cell(p.coeff(i)));
    }
    return rows;
}

}  // namespace mb
