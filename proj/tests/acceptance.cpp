// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bcat/combinatorics.hpp"
#include "bcat/gf_solver.hpp"
#include "bcat/growth.hpp"
#include "bcat/real_roots.hpp"
#include "bcat/state_system.hpp"

using namespace bcat;

namespace {

struct Check {
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      std::cerr << "  failed: " << what << "\n";
    }
  }
};

ExactPoly det_identity_minus(const StateSystem& sys, ComponentTag tag) {
  PolyMatrix m = -component_matrix(sys, *sys.find(tag));
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += ExactPoly{1};
  return bareiss_determinant(m);
}

std::vector<Rational> dp_sequence(int m, int n_max) {
  const auto v = dp_counts(m, n_max).unrestricted_sequence();
  return {v.begin(), v.end()};
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void golden_sequences(Check& c) {
  const std::vector<long> a2{1, 1, 2, 5, 8, 12, 18, 26, 37, 53, 76, 109};
  const std::vector<long> a3{1, 1, 2, 5, 14, 28, 55, 108, 214, 412, 787, 1497, 2841, 5364, 10088};
  for (const auto& [m, golden] : {std::pair{2, a2}, std::pair{3, a3}}) {
    const int n_max = static_cast<int>(golden.size()) - 1;
    const auto dp = dp_sequence(m, n_max);
    const auto series = generating_function(m).series(static_cast<std::size_t>(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const Rational want(golden[static_cast<std::size_t>(n)]);
      const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      c.expect(dp[static_cast<std::size_t>(n)] == want, "dp " + at);
      c.expect(series[static_cast<std::size_t>(n)] == want, "series " + at);
      if (n <= kDefaultOracleCap) c.expect(brute_force_count(m, n, kInf, kInf) == golden[static_cast<std::size_t>(n)], "oracle " + at);
    }
  }
}

void golden_generating_functions(Check& c) {
  const ExactPoly one_minus_x{1, -1};
  c.expect(generating_function(1) == RationalFunction(ExactPoly{1, 0, 1}, one_minus_x), "A^(1)");
  c.expect(generating_function(2) == RationalFunction(ExactPoly{1, -2, 2, 0, -1, 0, -1}, one_minus_x * one_minus_x * ExactPoly{1, -1, 0, -1}),
           "A^(2)");
  const RationalFunction a3 = generating_function(3);
  c.expect(a3.num() == ExactPoly{1, -1, -1, 1, 4, 0, -4, -3, -3, -5, -3, 2, 2}, "N_3");
  c.expect(a3.den() == ExactPoly{1, -2, -1, 1, 1, 2, 2, 2, -4, -2, 1, -2, 0, 1}, "D_3");
}

void golden_recurrence(Check& c) {
  const Recurrence r = recurrence(3);
  const std::vector<Rational> want{2, 1, -1, -1, -2, -2, -2, 4, 2, -1, 2, 0, -1};
  c.expect(r.order == 13, "order 13");
  c.expect(r.lag_coeffs == want, "coefficients");
  c.expect(r.valid_from == 13, "valid from 13");
  const int total = r.valid_from + 50;
  const auto dp = dp_sequence(3, total - 1);
  const auto replay = r.extend(std::span<const Rational>(dp).first(static_cast<std::size_t>(r.valid_from)), static_cast<std::size_t>(total));
  c.expect(replay == dp, "replay of 50 further terms");
}

void component_determinants(Check& c) {
  const StateSystem s2 = build_system(2);
  const StateSystem s3 = build_system(3);
  c.expect(det_identity_minus(s2, ComponentTag::U) == ExactPoly{1, -1, 0, -1}, "det(I - W_U2)");
  c.expect(det_identity_minus(s3, ComponentTag::V) == ExactPoly{1, 0, -1, -2, -1, -1, -1}, "det(I - W_V3)");
  c.expect(det_identity_minus(s3, ComponentTag::U) == ExactPoly{1, 1} * ExactPoly{1, -2, 1, -1, -1, 1}, "det(I - W_U3)");
}

void structure(Check& c) {
  for (int m = 2; m <= 30; ++m) {
    const StateSystem sys = build_system(m);
    const std::string at = " m=" + std::to_string(m);
    int cyclic = 0;
    for (const auto& comp : sys.components()) {
      if (!comp.cyclic) {
        c.expect(comp.members.size() == 1 && comp.tag == ComponentTag::AcyclicSingleton, "acyclic singleton" + at);
        continue;
      }
      ++cyclic;
      c.expect(comp.tag == ComponentTag::U || comp.tag == ComponentTag::V || comp.tag == ComponentTag::I, "tag" + at);
      c.expect(output_accessible(sys, comp), "output accessible" + at);
    }
    c.expect(cyclic == 3, "three cyclic components" + at);
    const Component* u = sys.find(ComponentTag::U);
    const Component* v = sys.find(ComponentTag::V);
    const Component* i = sys.find(ComponentTag::I);
    if (!u || !v || !i) continue;
    c.expect(u->members.size() == static_cast<std::size_t>(m), "|U|" + at);
    c.expect(v->members.size() == static_cast<std::size_t>((m - 1) * (m + 2) / 2), "|V|" + at);
    c.expect(i->members.size() == 1, "|I|" + at);
    c.expect(u->weighted_period == 1, "U period" + at);
    c.expect(v->weighted_period == (m == 2 ? 2 : 1), "V period" + at);
  }
}

void table_one(Check& c) {
  struct Row {
    int m;
    const char *lu, *lv, *alpha, *lower;
  };
  const Row rows[] = {
      {2, "1.466", "1.000", "1.466", "1.000"},   {3, "1.827", "1.691", "1.827", "1.189"},
      {4, "2.100", "2.091", "2.100", "1.380"},   {5, "2.312", "2.352", "2.352", "1.552"},
      {6, "2.480", "2.536", "2.536", "1.706"},   {7, "2.615", "2.675", "2.675", "1.841"},
      {8, "2.728", "2.786", "2.786", "1.961"},   {9, "2.822", "2.876", "2.876", "2.068"},
      {10, "2.902", "2.953", "2.953", "2.164"},  {20, "3.333", "3.357", "3.357", "2.756"},
      {50, "3.676", "3.682", "3.682", "3.339"},  {100, "3.817", "3.819", "3.819", "3.614"},
  };
  for (const Row& r : rows) {
    const GrowthReport g = growth_constants(r.m, 1e-10);
    const std::string at = " m=" + std::to_string(r.m);
    c.expect(fixed3(*g.lambda_U) == r.lu, "lambda_U" + at + " got " + fixed3(*g.lambda_U));
    c.expect(fixed3(*g.lambda_V) == r.lv, "lambda_V" + at + " got " + fixed3(*g.lambda_V));
    c.expect(fixed3(g.alpha) == r.alpha, "alpha" + at + " got " + fixed3(g.alpha));
    c.expect(fixed3(g.lower_bound) == r.lower, "lower bound" + at + " got " + fixed3(g.lower_bound));
  }
}

void asymptotics(Check& c) {
  const struct {
    int m;
    double rho, kappa;
  } want[] = {{2, 0.682, 1.51}, {3, 0.547, 2.99}};
  for (const auto& w : want) {
    const PoleReport p = dominant_pole_asymptotics(w.m);
    const std::string at = " m=" + std::to_string(w.m);
    c.expect(std::abs(p.rho.mid() - w.rho) <= 0.001, "rho" + at);
    c.expect(p.simple.value_or(false), "simple pole" + at);
    if (!p.kappa) continue;
    c.expect(std::abs(*p.kappa - w.kappa) <= 0.01, "kappa" + at);
    const double alpha = growth_constants(w.m).alpha;
    const double ratio = dp_counts(w.m, 60).unrestricted(60).get_d() / (*p.kappa * std::pow(alpha, 60));
    c.expect(ratio >= 0.99 && ratio <= 1.01, "a_60 / (kappa alpha^60)" + at);
  }
}

void property_suite(Check& c) {
  for (int m = 1; m <= 5; ++m) {
    const auto dp = dp_sequence(m, 10);
    const auto series = generating_function(m).series(10);
    for (int n = 0; n <= 10; ++n) {
      const auto i = static_cast<std::size_t>(n);
      c.expect(dp[i] == series[i] && dp[i] == Rational(brute_force_count(m, n, kInf, kInf)),
               "three-way m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  for (int m = 1; m <= 8; ++m) {
    const RationalFunction gf = generating_function(m);
    c.expect(dp_sequence(m, 200) == gf.series(200), "dp vs series m=" + std::to_string(m));
    if (m >= 2) c.expect(gf.den().degree() <= recurrence_order_bound(m), "deg den <= d_m m=" + std::to_string(m));
  }
  for (int k = 1; k <= 9; ++k)
    for (int p = 0; p <= 9; ++p)
      c.expect(c_kp(k, Threshold::finite(p)) == c_kp_enumerated(k, Threshold::finite(p)), "c_kp k=" + std::to_string(k));
  for (int m = 2; m <= 6; ++m) {
    const StateSystem sys = build_system(m);
    for (auto tag : {ComponentTag::U, ComponentTag::V, ComponentTag::I}) {
      const Component& comp = *sys.find(tag);
      double prev = 0.0;
      for (double x : {0.05, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        const double s = spectral_radius_at(sys, comp, x);
        c.expect(s > prev, "phi monotone m=" + std::to_string(m));
        prev = s;
      }
      if (tag == ComponentTag::I) continue;
      const double r = component_radius(sys, comp, 1e-10).r.mid();
      const auto roots = real_roots_positive(det_identity_minus(sys, tag), 0.0, 1.0, 1e-10);
      c.expect(!roots.empty() && std::abs(roots.front().value() - r) <= 2e-10, "radius vs det root m=" + std::to_string(m));
    }
  }
  double prev_alpha = 0.0;
  for (int m = 2; m <= 50; ++m) {
    const GrowthReport g = growth_constants(m, 1e-10);
    if (m <= 31) c.expect(prev_alpha <= g.alpha + 2e-10, "alpha monotone m=" + std::to_string(m));
    c.expect(g.lower_bound <= g.alpha && g.alpha < 4.0, "alpha bounds m=" + std::to_string(m));
    prev_alpha = g.alpha;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"golden sequences", golden_sequences},
      {"golden generating functions", golden_generating_functions},
      {"golden recurrence", golden_recurrence},
      {"component determinants", component_determinants},
      {"structure", structure},
      {"growth table", table_one},
      {"asymptotics", asymptotics},
      {"property suite", property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s: %s (%.2fs)\n", i + 1, criteria[i].first, c.ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
