#include "hookforest/report.hpp"

#include <limits>
#include <stdexcept>

namespace hookforest {

nlohmann::json poly_to_triples(const BiPoly& poly) {
    auto out = nlohmann::json::array();
    const Coeff lo = std::numeric_limits<std::int64_t>::min();
    const Coeff hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& [m, c] : poly.terms()) {
        nlohmann::json coeff;
        if (c >= lo && c <= hi) {
            coeff = c.convert_to<std::int64_t>();
        } else {
            coeff = c.str();
        }
        out.push_back({m.t_exp, m.q_exp, coeff});
    }
    return out;
}

BiPoly poly_from_triples(const nlohmann::json& triples) {
    if (!triples.is_array()) throw std::invalid_argument("polynomial must be a list of triples");
    BiPoly out;
    for (const auto& triple : triples) {
        if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_unsigned() ||
            !triple[1].is_number_unsigned()) {
            throw std::invalid_argument("malformed [t-exp, q-exp, coeff] triple");
        }
        Coeff c;
        if (triple[2].is_number_integer()) {
            c = triple[2].get<std::int64_t>();
        } else if (triple[2].is_string()) {
            c = Coeff(triple[2].get<std::string>());
        } else {
            throw std::invalid_argument("coefficient must be an integer");
        }
        out.add_term(triple[0].get<std::uint32_t>(), triple[1].get<std::uint32_t>(), c);
    }
    return out;
}

nlohmann::json report_to_json(const CheckReport& report) {
    return {
        {"theorem", report.theorem},
        {"forest", report.forest},
        {"lhs", poly_to_triples(report.lhs)},
        {"rhs", poly_to_triples(report.rhs)},
        {"pass", report.pass},
        {"witness", report.witness ? nlohmann::json(*report.witness) : nlohmann::json(nullptr)},
    };
}

CheckReport report_from_json(const nlohmann::json& record) {
    try {
        CheckReport report;
        report.theorem = record.at("theorem").get<std::string>();
        report.forest = record.at("forest").get<std::string>();
        report.lhs = poly_from_triples(record.at("lhs"));
        report.rhs = poly_from_triples(record.at("rhs"));
        report.pass = record.at("pass").get<bool>();
        if (!record.at("witness").is_null()) report.witness = record.at("witness").get<std::string>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report record: ") + e.what());
    }
}

std::string render_record(const CheckReport& report) { return report_to_json(report).dump(); }

CheckReport parse_record(std::string_view line) {
    try {
        return report_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed report record: ") + e.what());
    }
}

std::string render_human(const CheckReport& report) {
    std::string out = report.theorem + " " + (report.forest.empty() ? "\"\"" : report.forest) + ": " +
                      (report.pass ? "pass" : "FAIL") + "\n";
    out += "  lhs: " + to_string(report.lhs) + "\n";
    out += "  rhs: " + to_string(report.rhs) + "\n";
    if (report.witness) out += "  witness: " + *report.witness + "\n";
    return out;
}

}  // namespace hookforest
