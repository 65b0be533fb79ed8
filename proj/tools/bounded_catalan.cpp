#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bcat/combinatorics.hpp"
#include "bcat/gf_solver.hpp"
#include "bcat/growth.hpp"
#include "bcat/report.hpp"
#include "bcat/state_system.hpp"

namespace {

using namespace bcat;

constexpr int kExitValidation = 2;
constexpr int kExitCrossCheck = 3;
// Largest m for which growth also reports pole data.
constexpr int kPoleMaxM = 8;

struct CrossCheckFailure {};

struct Options {
  int m = 2;
  int n = 10;
  std::string m_list = "2-10,20,50,100";
  std::string method = "dp";
  std::string format = "plain";
  double tol = 1e-10;
  int oracle_cap = kDefaultOracleCap;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw DomainError(std::string("format '") + o.format + "' is not available for " + cmd);
}

void require_m(const Options& o) {
  if (o.m < 1) throw DomainError("--m must be at least 1");
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

int cmd_enumerate(const Options& o) {
  require_m(o);
  require_format(o, {"plain", "json", "csv"}, "enumerate");
  if (o.n < 0) throw DomainError("--n must be nonnegative");
  const bool all = o.method == "all";
  if (!all && o.method != "oracle" && o.method != "dp" && o.method != "series")
    throw DomainError("unknown method '" + o.method + "'");
  if (o.method == "oracle" && o.n > o.oracle_cap)
    throw DomainError("oracle method limited to n <= " + std::to_string(o.oracle_cap));

  std::vector<std::pair<std::string, std::vector<std::string>>> columns;
  if (o.method == "oracle" || (all && o.n <= o.oracle_cap)) {
    std::vector<std::string> col;
    for (int n = 0; n <= o.n; ++n) col.push_back(to_string(brute_force_count(o.m, n, kInf, kInf, o.oracle_cap)));
    columns.emplace_back("oracle", std::move(col));
  } else if (all) {
    std::cerr << "oracle skipped: n exceeds the oracle cap " << o.oracle_cap << "\n";
  }
  if (o.method == "dp" || all) {
    std::vector<std::string> col{"1"};
    if (o.n >= 1) {
      const CountTable t = dp_counts(o.m, o.n);
      for (int n = 1; n <= o.n; ++n) col.push_back(to_string(t.unrestricted(n)));
    }
    columns.emplace_back("dp", std::move(col));
  }
  if (o.method == "series" || all) {
    std::vector<std::string> col;
    for (const auto& c : generating_function(o.m).series(static_cast<std::size_t>(o.n))) col.push_back(to_string(c));
    columns.emplace_back("series", std::move(col));
  }
  const bool agree = std::all_of(columns.begin(), columns.end(), [&](const auto& c) { return c.second == columns.front().second; });

  if (o.format == "json") {
    Json seq = Json::object();
    for (const auto& [name, col] : columns) seq[name] = col;
    Json j{{"m", o.m}, {"n_max", o.n}, {"sequences", std::move(seq)}};
    if (all) j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "n";
    for (const auto& c : columns) std::cout << "," << c.first;
    std::cout << "\n";
    for (int n = 0; n <= o.n; ++n) {
      std::cout << n;
      for (const auto& c : columns) std::cout << "," << c.second[static_cast<std::size_t>(n)];
      std::cout << "\n";
    }
    if (all) std::cerr << (agree ? "AGREE" : "DISAGREE") << "\n";
  } else if (all) {
    for (const auto& [name, col] : columns) std::cout << name << ": " << join(col) << "\n";
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  } else {
    std::cout << join(columns.front().second) << "\n";
  }
  if (!agree) throw CrossCheckFailure{};
  return 0;
}

int cmd_gf(const Options& o) {
  require_m(o);
  require_format(o, {"plain", "json"}, "gf");
  const RationalFunction gf = generating_function(o.m);
  if (o.format == "json")
    std::cout << gf_to_json(o.m, gf).dump(2) << "\n";
  else
    std::cout << to_string(gf) << "\n";
  return 0;
}

int cmd_recurrence(const Options& o) {
  require_m(o);
  require_format(o, {"plain", "json"}, "recurrence");
  const Recurrence r = recurrence(o.m);
  if (o.format == "json") {
    Json j = to_json(r);
    j["bound_d_m"] = recurrence_order_bound(o.m);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> c;
  for (const auto& v : r.lag_coeffs) c.push_back(to_string(v));
  std::cout << "order " << r.order << "\ncoeffs " << join(c) << "\nvalid_from " << r.valid_from << "\nbound_d_m "
            << recurrence_order_bound(o.m) << "\n";
  return 0;
}

int cmd_growth(const Options& o) {
  require_m(o);
  require_format(o, {"plain", "json"}, "growth");
  if (!(o.tol > 0)) throw DomainError("--tol must be positive");
  const GrowthReport g = growth_constants(o.m, o.tol);
  std::optional<PoleReport> pole;
  if (o.m >= 2 && o.m <= kPoleMaxM) {
    pole = dominant_pole_asymptotics(o.m, o.tol);
    if (std::abs(pole->rho.mid() - g.rho) > 2 * o.tol + pole->rho.width()) {
      std::cerr << "dominant pole " << pole->rho.mid() << " disagrees with component radius " << g.rho << "\n";
      throw CrossCheckFailure{};
    }
  } else if (o.m > kPoleMaxM) {
    std::cerr << "pole data skipped for m > " << kPoleMaxM << "\n";
  }

  if (o.format == "json") {
    Json j = to_json(g);
    j["pole"] = pole ? to_json(*pole) : Json();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto opt = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    std::ostringstream os;
    os.precision(12);
    os << *v;
    return os.str();
  };
  std::cout.precision(12);
  std::cout << "m " << g.m << "\n";
  if (g.r_U) std::cout << "r_U [" << g.r_U->lo << ", " << g.r_U->hi << "]\n";
  if (g.r_V) std::cout << "r_V [" << g.r_V->lo << ", " << g.r_V->hi << "]\n";
  std::cout << "lambda_U " << opt(g.lambda_U) << "\nlambda_V " << opt(g.lambda_V) << "\nalpha " << g.alpha << "\nrho "
            << g.rho << "\nlower_bound " << g.lower_bound << "\ndominant " << to_string(g.dominant) << "\ncertified "
            << (g.certified ? "yes" : "no") << "\n";
  if (pole) {
    std::cout << "pole_simple " << (pole->simple ? "yes" : "unknown") << "\nkappa " << opt(pole->kappa)
              << "\nnext_real_pole " << opt(pole->next_pole_modulus) << "\n";
  }
  return 0;
}

int cmd_graph(const Options& o) {
  require_m(o);
  require_format(o, {"dot", "plain"}, "graph");
  std::cout << to_dot(build_system(o.m));
  return 0;
}

unsigned thread_count() {
  if (const char* env = std::getenv("BOUNDED_CATALAN_THREADS")) {
    const int v = std::atoi(env);
    if (v < 1) throw DomainError("BOUNDED_CATALAN_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_table(const Options& o) {
  require_format(o, {"plain", "json", "csv"}, "table");
  if (!(o.tol > 0)) throw DomainError("--tol must be positive");
  const std::vector<int> ms = parse_m_list(o.m_list);
  std::vector<GrowthReport> rows(ms.size());
  std::vector<std::exception_ptr> errors(ms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ms.size();) {
      try {
        rows[i] = growth_constants(ms[i], o.tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned width = std::min<unsigned>(thread_count(), static_cast<unsigned>(ms.size()));
  for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (o.format == "json") {
    Json a = Json::array();
    for (const auto& g : rows) a.push_back(to_json(g));
    std::cout << a.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << table_csv_header() << "\n";
    for (const auto& g : rows) std::cout << table_csv_row(g) << "\n";
  } else {
    std::cout << table_plain_header() << "\n";
    for (const auto& g : rows) std::cout << table_plain_row(g) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts 132-avoiding permutations with bounded adjacent differences"};
  app.require_subcommand(1);
  Options o;

  auto add_m = [&](CLI::App* c) { c->add_option("--m", o.m, "Adjacency bound m")->required(); };

  auto* enumerate = app.add_subcommand("enumerate", "Print a_0..a_n");
  add_m(enumerate);
  enumerate->add_option("--n", o.n, "Largest length")->required();
  enumerate->add_option("--method", o.method, "oracle, dp, series or all");
  enumerate->add_option("--oracle-cap", o.oracle_cap, "Largest n for exhaustive enumeration");
  enumerate->add_option("--format", o.format, "plain, json or csv");

  auto* gf = app.add_subcommand("gf", "Reduced generating function");
  add_m(gf);
  gf->add_option("--format", o.format, "plain or json");

  auto* rec = app.add_subcommand("recurrence", "Linear recurrence from the denominator");
  add_m(rec);
  rec->add_option("--format", o.format, "plain or json");

  auto* growth = app.add_subcommand("growth", "Component radii, growth constant and pole data");
  add_m(growth);
  growth->add_option("--tol", o.tol, "Bracket width for radii");
  growth->add_option("--format", o.format, "plain or json");

  auto* graph = app.add_subcommand("graph", "Dependency graph in DOT");
  add_m(graph);
  graph->add_option("--format", o.format, "dot");

  auto* table = app.add_subcommand("table", "Growth table over a list of m");
  table->add_option("--m-list", o.m_list, "Values such as 2-10,20,50,100");
  table->add_option("--tol", o.tol, "Bracket width for radii");
  table->add_option("--format", o.format, "plain, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (graph->parsed() && o.format == "plain") o.format = "dot";
    if (*enumerate) return cmd_enumerate(o);
    if (*gf) return cmd_gf(o);
    if (*rec) return cmd_recurrence(o);
    if (*growth) return cmd_growth(o);
    if (*graph) return cmd_graph(o);
    if (*table) return cmd_table(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CrossCheckFailure&) {
    return kExitCrossCheck;
  } catch (const StructureError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return 0;
}
