#include "bcat/gf_solver.hpp"

#include <algorithm>

#include "bcat/combinatorics.hpp"

namespace bcat {

const BigInt& CountTable::value(const StatePair& s, int n) const {
  auto idx = [this](Threshold t) { return t.is_infinite() ? m_ : t.value(); };
  if (!s.p.in_range(m_) || !s.q.in_range(m_)) throw DomainError("state outside B_m x B_m");
  return value(idx(s.p) * (m_ + 1) + idx(s.q), n);
}

std::vector<BigInt> CountTable::unrestricted_sequence() const {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) out.push_back(unrestricted(n));
  return out;
}

CountTable dp_counts(int m, int n_max) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  if (n_max < 1) throw DomainError("dp_counts: n_max must be at least 1");
  const int width = m + 1;
  const int states = width * width;
  auto idx = [m](Threshold t) { return t.is_infinite() ? m : t.value(); };
  auto th = [m](int i) { return i == m ? kInf : Threshold::finite(i); };

  std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(m) + 1, std::vector<BigInt>(static_cast<std::size_t>(width)));
  for (int k = 1; k <= m; ++k)
    for (int pi = 0; pi < width; ++pi) c[static_cast<std::size_t>(k)][static_cast<std::size_t>(pi)] = c_kp(k, th(pi));

  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max), std::vector<BigInt>(static_cast<std::size_t>(states)));
  for (auto& v : rows[0]) v = 1;
  for (int n = 2; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n - 1)];
    for (int pi = 0; pi < width; ++pi) {
      const Threshold p = th(pi);
      for (int qi = 0; qi < width; ++qi) {
        const Threshold q = th(qi);
        BigInt& acc = row[static_cast<std::size_t>(pi * width + qi)];
        // Maximum at position k with a nonempty right block.
        for (int k = 1; k <= std::min(m, n - 1); ++k) {
          const BigInt& ck = c[static_cast<std::size_t>(k)][static_cast<std::size_t>(pi)];
          if (sgn(ck) == 0) continue;
          const auto qs = q.minus(k);
          if (!qs) continue;
          const int src = (m - k) * width + idx(*qs);
          add_product(acc, ck, rows[static_cast<std::size_t>(n - k - 1)][static_cast<std::size_t>(src)]);
        }
        // Maximum appended last.
        if (const auto ps = p.minus(1)) acc += rows[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(idx(*ps) * width + (m - 1))];
      }
    }
  }
  return CountTable(m, n_max, std::move(rows));
}

namespace {

std::vector<char> reaching_output(const StateSystem& sys) {
  std::vector<char> mark(static_cast<std::size_t>(sys.state_count()), 0);
  std::vector<int> todo{sys.output_state()};
  mark[static_cast<std::size_t>(sys.output_state())] = 1;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (const Edge& e : sys.in_edges(v)) {
      if (!mark[static_cast<std::size_t>(e.source)]) {
        mark[static_cast<std::size_t>(e.source)] = 1;
        todo.push_back(e.source);
      }
    }
  }
  return mark;
}

ExactPoly poly_lcm(const ExactPoly& a, const ExactPoly& b) {
  if (a == b || b.degree() <= 0) return a;
  if (a.degree() <= 0) return b;
  const ExactPoly g = gcd(a, b);
  return a * exact_quotient(b, g);
}

}  // namespace

std::map<StatePair, RationalFunction> solve_system(const StateSystem& sys, SolveMode mode) {
  const int n = sys.state_count();
  std::vector<char> needed(static_cast<std::size_t>(n), 1);
  if (mode == SolveMode::OutputOnly) needed = reaching_output(sys);

  const RationalFunction x_rf = RationalFunction::polynomial(ExactPoly::x());
  std::vector<RationalFunction> f(static_cast<std::size_t>(n));
  std::vector<int> local(static_cast<std::size_t>(n), -1);

  for (const auto& comp : sys.components()) {
    if (!needed[static_cast<std::size_t>(comp.members.front())]) continue;
    const auto size = static_cast<Eigen::Index>(comp.members.size());
    for (Eigen::Index i = 0; i < size; ++i) local[static_cast<std::size_t>(comp.members[static_cast<std::size_t>(i)])] = static_cast<int>(i);

    // Contributions from already-solved components.
    std::vector<RationalFunction> rhs(comp.members.size(), x_rf);
    IntPolyMatrix a = IntPolyMatrix::Constant(size, size, IntPoly{});
    for (Eigen::Index i = 0; i < size; ++i) {
      a(i, i) = IntPoly(1L);
      const int target = comp.members[static_cast<std::size_t>(i)];
      for (const Edge& e : sys.in_edges(target)) {
        const int j = local[static_cast<std::size_t>(e.source)];
        if (sys.component_of(e.source) == sys.component_of(target)) {
          a(i, j) -= IntPoly::monomial(sys.coefficient(e), static_cast<std::size_t>(e.degree));
        } else {
          rhs[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)] + sys.monomial(e) * f[static_cast<std::size_t>(e.source)];
        }
      }
    }
    if (!comp.cyclic) {
      f[static_cast<std::size_t>(comp.members.front())] = rhs.front();
      continue;
    }

    // Clear all denominators: rhs_i = num_i * (L / den_i) / scale.
    ExactPoly common(1L);
    for (const auto& r : rhs) common = poly_lcm(common, r.den());
    std::vector<ExactPoly> scaled;
    scaled.reserve(rhs.size());
    BigInt denominators = 1;
    for (const auto& r : rhs) {
      scaled.push_back(r.num() * exact_quotient(common, r.den()));
      for (const auto& c : scaled.back().coeffs()) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
    }
    IntPolyMatrix b(size, 1);
    for (Eigen::Index i = 0; i < size; ++i)
      b(i, 0) = clear_denominators(scaled[static_cast<std::size_t>(i)] * Rational(denominators));

    const auto sol = bareiss_solve(a, b);
    if (sol.scale.is_zero() || sgn(sol.scale.coeff(0)) == 0)
      throw StructureError("component block is singular at x = 0");
    const ExactPoly den = to_rational(sol.scale) * common * Rational(denominators);
    for (Eigen::Index i = 0; i < size; ++i)
      f[static_cast<std::size_t>(comp.members[static_cast<std::size_t>(i)])] = rf_reduce(to_rational(sol.x(i, 0)), den);
  }

  std::map<StatePair, RationalFunction> out;
  for (int s = 0; s < n; ++s)
    if (needed[static_cast<std::size_t>(s)]) out.emplace(sys.state(s), f[static_cast<std::size_t>(s)]);
  return out;
}

RationalFunction generating_function(const StateSystem& sys) {
  const auto sol = solve_system(sys, SolveMode::OutputOnly);
  return RationalFunction::polynomial(ExactPoly(1L)) + sol.at(StatePair{kInf, kInf});
}

RationalFunction generating_function(int m) { return generating_function(build_system(m)); }

std::vector<Rational> Recurrence::extend(std::span<const Rational> prefix, std::size_t total) const {
  if (prefix.size() < static_cast<std::size_t>(valid_from))
    throw DomainError("recurrence replay needs at least valid_from initial terms");
  std::vector<Rational> a(prefix.begin(), prefix.end());
  a.reserve(total);
  while (a.size() < total) {
    const std::size_t n = a.size();
    Rational next = 0;
    for (int j = 1; j <= order; ++j) {
      const Rational& c = lag_coeffs[static_cast<std::size_t>(j - 1)];
      if (sgn(c) != 0) next += c * a[n - static_cast<std::size_t>(j)];
    }
    a.push_back(next);
  }
  return a;
}

Recurrence recurrence_from(const RationalFunction& gf) {
  const ExactPoly& den = gf.den();
  if (den.coeff(0) != 1) throw StructureError("recurrence: denominator constant term is not 1");
  Recurrence r;
  r.order = den.degree();
  for (int j = 1; j <= r.order; ++j) r.lag_coeffs.push_back(-den.coeff(static_cast<std::size_t>(j)));
  // a_{n-order} must exist and the numerator must have no x^n term.
  r.valid_from = std::max(gf.num().degree() + 1, r.order);
  return r;
}

Recurrence recurrence(int m) { return recurrence_from(generating_function(m)); }

long recurrence_order_bound(int m) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  if (m == 1) return 1;
  const long mm = m;
  return mm * mm + mm * (mm - 1) * (mm + 2) / 2 + 1;
}

}  // namespace bcat
