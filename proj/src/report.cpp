#include "bcat/report.hpp"

#include <cstdio>

namespace bcat {

namespace {

int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("invalid m-list '" + whole + "'");
  const long v = std::stol(s);
  if (v < 1 || v > 1'000'000) throw DomainError("m out of range in '" + whole + "'");
  return static_cast<int>(v);
}

Json coeff_array(const ExactPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

ExactPoly poly_from(const Json& a) {
  std::vector<Rational> c;
  for (const auto& s : a) c.push_back(parse_rational(s.get<std::string>()));
  return ExactPoly(std::move(c));
}

std::string fixed3(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *v);
  return buf;
}

}  // namespace

std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_int(item, text));
    } else {
      const int a = parse_int(item.substr(0, dash), text);
      const int b = parse_int(item.substr(dash + 1), text);
      if (a > b) throw DomainError("descending range in '" + text + "'");
      for (int m = a; m <= b; ++m) out.push_back(m);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json to_json(const Recurrence& r) {
  Json c = Json::array();
  for (const auto& v : r.lag_coeffs) c.push_back(to_string(v));
  return Json{{"order", r.order}, {"coeffs", std::move(c)}, {"valid_from", r.valid_from}};
}

Json gf_to_json(int m, const RationalFunction& gf) {
  return Json{{"m", m},
              {"num", coeff_array(gf.num())},
              {"den", coeff_array(gf.den())},
              {"recurrence", to_json(recurrence_from(gf))},
              {"bound_d_m", recurrence_order_bound(m)}};
}

RationalFunction gf_from_json(const Json& j) { return rf_reduce(poly_from(j.at("num")), poly_from(j.at("den"))); }

Json to_json(const Bracket& b) { return Json{{"lo", b.lo}, {"hi", b.hi}}; }

Json to_json(const GrowthReport& g) {
  Json j{{"m", g.m}};
  j["r_U"] = g.r_U ? to_json(*g.r_U) : Json();
  j["r_V"] = g.r_V ? to_json(*g.r_V) : Json();
  j["lambda_U"] = g.lambda_U ? Json(*g.lambda_U) : Json();
  j["lambda_V"] = g.lambda_V ? Json(*g.lambda_V) : Json();
  j["alpha"] = g.alpha;
  j["rho"] = g.rho;
  j["lower_bound"] = g.lower_bound;
  j["dominant"] = to_string(g.dominant);
  j["certified"] = g.certified;
  return j;
}

Json to_json(const PoleReport& p) {
  Json j{{"m", p.m}, {"rho", to_json(p.rho)}};
  j["pole_simple"] = p.simple ? Json(*p.simple) : Json("unknown");
  j["kappa"] = p.kappa ? Json(*p.kappa) : Json();
  j["next_real_pole"] = p.next_pole_modulus ? Json(*p.next_pole_modulus) : Json();
  return j;
}

std::string table_csv_header() { return "m,lambda_U,lambda_V,alpha,lower_bound"; }

std::string table_csv_row(const GrowthReport& g) {
  return std::to_string(g.m) + "," + fixed3(g.lambda_U) + "," + fixed3(g.lambda_V) + "," + fixed3(g.alpha) + "," +
         fixed3(g.lower_bound);
}

std::string table_plain_header() { return "  m   lambda_U  lambda_V  alpha   C^(1/(m+1))"; }

std::string table_plain_row(const GrowthReport& g) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%3d   %-8s  %-8s  %-6s  %s", g.m, fixed3(g.lambda_U).c_str(), fixed3(g.lambda_V).c_str(),
                fixed3(g.alpha).c_str(), fixed3(g.lower_bound).c_str());
  return buf;
}

}  // namespace bcat
