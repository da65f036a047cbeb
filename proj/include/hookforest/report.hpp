#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hookforest/qpoly.hpp"
#include "hookforest/verify.hpp"

namespace hookforest {

/// [[t-exp, q-exp, coeff], ...] in (t, q) order. Coefficients that do not
/// fit in 64 bits are written as decimal strings.
nlohmann::json poly_to_triples(const BiPoly& poly);
/// Throws std::invalid_argument on malformed input.
BiPoly poly_from_triples(const nlohmann::json& triples);

nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& record);

/// Single-line JSON record.
std::string render_record(const CheckReport& report);
CheckReport parse_record(std::string_view line);

/// Multi-line human summary.
std::string render_human(const CheckReport& report);

}  // namespace hookforest
