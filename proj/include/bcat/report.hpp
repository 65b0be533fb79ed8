#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcat/gf_solver.hpp"
#include "bcat/growth.hpp"

namespace bcat {

using Json = nlohmann::ordered_json;

/// Parses lists such as "2-10,20,50,100"; ranges are inclusive.
std::vector<int> parse_m_list(const std::string& text);

Json to_json(const Recurrence& r);
/// {"m", "num", "den", "recurrence", "bound_d_m"} with "p/q" coefficient strings.
Json gf_to_json(int m, const RationalFunction& gf);
/// Inverse of the num/den part of gf_to_json.
RationalFunction gf_from_json(const Json& j);

Json to_json(const Bracket& b);
Json to_json(const GrowthReport& g);
Json to_json(const PoleReport& p);

/// Table columns m, lambda_U, lambda_V, alpha, lower_bound rounded to 3 places.
std::string table_csv_header();
std::string table_csv_row(const GrowthReport& g);
std::string table_plain_header();
std::string table_plain_row(const GrowthReport& g);

}  // namespace bcat
