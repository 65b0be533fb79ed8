#include "bcat/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcat/combinatorics.hpp"
#include "bcat/gf_solver.hpp"
#include "bcat/real_roots.hpp"

namespace bcat {

ComponentOperator::ComponentOperator(const StateSystem& sys, const Component& c) {
  if (!c.cyclic) throw DomainError("spectral data requested for an acyclic component");
  const auto n = static_cast<Eigen::Index>(c.members.size());
  std::vector<int> local(static_cast<std::size_t>(sys.state_count()), -1);
  for (Eigen::Index i = 0; i < n; ++i) local[static_cast<std::size_t>(c.members[static_cast<std::size_t>(i)])] = static_cast<int>(i);

  const int comp = sys.component_of(c.members.front());
  std::vector<Eigen::Triplet<double, int>> triplets;
  for (Eigen::Index i = 0; i < n; ++i)
    for (const Edge& e : sys.in_edges(c.members[static_cast<std::size_t>(i)]))
      if (sys.component_of(e.source) == comp) triplets.emplace_back(static_cast<int>(i), local[static_cast<std::size_t>(e.source)], 1.0);
  matrix_.resize(n, n);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();

  // Edges are sorted by source within a row, matching the compressed order.
  coeffs_.reserve(static_cast<std::size_t>(matrix_.nonZeros()));
  degrees_.reserve(static_cast<std::size_t>(matrix_.nonZeros()));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const Edge& e : sys.in_edges(c.members[static_cast<std::size_t>(i)])) {
      if (sys.component_of(e.source) != comp) continue;
      coeffs_.push_back(to_double(sys.coefficient(e)));
      degrees_.push_back(e.degree);
    }
  }
  if (coeffs_.size() != static_cast<std::size_t>(matrix_.nonZeros()))
    throw StructureError("component operator: repeated entry in W");
}

void ComponentOperator::set_x(double x) {
  if (!(x > 0.0)) throw DomainError("evaluation point must be positive");
  x_ = x;
  const int max_deg = degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
  std::vector<double> powers(static_cast<std::size_t>(max_deg) + 1, 1.0);
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * x;
  double* values = matrix_.valuePtr();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) values[j] = coeffs_[j] * powers[static_cast<std::size_t>(degrees_[j])];
}

PerronState perron_iterate(const ComponentOperator& op, double tol, const Eigen::VectorXd* warm,
                           std::optional<double> decide, int max_iterations) {
  const Eigen::Index n = op.size();
  PerronState st;
  st.x = op.x();
  Eigen::VectorXd v = (warm && warm->size() == n && warm->minCoeff() > 0.0) ? *warm : Eigen::VectorXd::Ones(n);
  v /= v.sum();
  Eigen::VectorXd y(n);
  for (int it = 1; it <= max_iterations; ++it) {
    y.noalias() = op.matrix() * v;
    y += v;
    const Eigen::ArrayXd ratio = y.array() / v.array();
    st.spr = {ratio.minCoeff() - 1.0, ratio.maxCoeff() - 1.0};
    st.iterations = it;
    v = y / y.sum();
    if (st.spr.width() < tol || (decide && !st.spr.contains(*decide))) {
      st.converged = true;
      break;
    }
  }
  st.right_vector = std::move(v);
  return st;
}

double spectral_radius_at(const StateSystem& sys, const Component& c, double x, double tol) {
  ComponentOperator op(sys, c);
  op.set_x(x);
  return perron_iterate(op, tol).spr.mid();
}

RadiusResult component_radius(const StateSystem& sys, const Component& c, double tol) {
  ComponentOperator op(sys, c);
  // Ratios this close to 1 are treated as undecidable in double precision.
  const double eps = 64 * std::numeric_limits<double>::epsilon();
  RadiusResult res;

  op.set_x(1.0);
  PerronState at_one = perron_iterate(op, eps, nullptr, 1.0);
  if (at_one.spr.lo >= 1.0 - eps && at_one.spr.hi <= 1.0 + eps) {
    res.r = {1.0, 1.0};
    return res;
  }
  if (at_one.spr.hi < 1.0) throw StructureError("component radius exceeds 1");

  double lo = 0.25;
  Eigen::VectorXd warm = at_one.right_vector;
  for (;;) {
    op.set_x(lo);
    PerronState st = perron_iterate(op, eps, &warm, 1.0);
    if (st.spr.hi < 1.0) {
      warm = st.right_vector;
      break;
    }
    lo /= 2;
    if (lo < 1e-12) throw StructureError("component radius bracket search failed");
  }
  double hi = 1.0;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    op.set_x(mid);
    PerronState st = perron_iterate(op, eps, &warm, 1.0);
    warm = st.right_vector;
    if (st.spr.hi < 1.0) {
      lo = mid;
    } else if (st.spr.lo > 1.0) {
      hi = mid;
    } else {
      res.certified = false;
      (st.spr.mid() < 1.0 ? lo : hi) = mid;
    }
  }
  res.r = {lo, hi};
  return res;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::U: return "U";
    case Dominance::V: return "V";
    case Dominance::Tie: return "tie";
    case Dominance::None: return "none";
  }
  return "?";
}

double catalan_lower_bound(int m) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  return std::exp(log_of(catalan(m - 1)) / (m + 1));
}

GrowthReport growth_constants(const StateSystem& sys, double tol) {
  GrowthReport rep;
  rep.m = sys.m();
  rep.lower_bound = catalan_lower_bound(rep.m);
  if (rep.m == 1) return rep;

  const Component* u = sys.find(ComponentTag::U);
  const Component* v = sys.find(ComponentTag::V);
  if (!u || !v) throw StructureError("missing U or V component");
  const RadiusResult ru = component_radius(sys, *u, tol);
  const RadiusResult rv = component_radius(sys, *v, tol);
  rep.r_U = ru.r;
  rep.r_V = rv.r;
  rep.certified = ru.certified && rv.certified;
  rep.lambda_U = 1.0 / ru.r.mid();
  rep.lambda_V = 1.0 / rv.r.mid();
  rep.alpha = std::max(*rep.lambda_U, *rep.lambda_V);
  rep.rho = std::min(ru.r.mid(), rv.r.mid());
  if (std::abs(*rep.lambda_U - *rep.lambda_V) < 10 * tol)
    rep.dominant = Dominance::Tie;
  else
    rep.dominant = *rep.lambda_U > *rep.lambda_V ? Dominance::U : Dominance::V;
  return rep;
}

GrowthReport growth_constants(int m, double tol) { return growth_constants(build_system(m), tol); }

PoleReport dominant_pole_asymptotics(const RationalFunction& gf, int m, double tol) {
  PoleReport rep;
  rep.m = m;
  const ExactPoly& den = gf.den();
  const Rational tol_q(tol);
  const Rational bound = root_modulus_bound(den);
  const auto roots = real_roots_positive(den, Rational(0), bound, tol_q);
  if (roots.empty()) throw StructureError("denominator has no positive root");
  rep.rho = {roots.front().lo.get_d(), roots.front().hi.get_d()};
  if (roots.size() > 1) rep.next_pole_modulus = roots[1].value();

  const Rational rho = (roots.front().lo + roots.front().hi) / 2;
  double scale = 0.0;
  for (const auto& c : den.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
  const Rational dprime = den.derivative().evaluate(rho);
  if (std::abs(dprime.get_d()) > kSimplePoleThreshold * scale) {
    rep.simple = true;
    rep.kappa = Rational(-gf.num().evaluate(rho) / (rho * dprime)).get_d();
  }
  return rep;
}

PoleReport dominant_pole_asymptotics(int m, double tol) {
  if (m < 2) throw DomainError("pole asymptotics need m >= 2");
  return dominant_pole_asymptotics(generating_function(m), m, tol);
}

}  // namespace bcat
