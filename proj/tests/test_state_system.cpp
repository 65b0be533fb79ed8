#include <doctest.h>

#include "bcat/state_system.hpp"
#include "oracles.hpp"

using namespace bcat;

namespace {

const Threshold f0 = Threshold::finite(0), f1 = Threshold::finite(1), f2 = Threshold::finite(2);

PolyMatrix identity_minus(const PolyMatrix& w) {
  PolyMatrix m = -w;
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += ExactPoly{1};
  return m;
}

ExactPoly mono(long c, std::size_t k) { return ExactPoly::monomial(Rational(c), k); }

}  // namespace

TEST_CASE("state order is lexicographic with infinity last") {
  const StateSystem sys = build_system(3);
  CHECK(sys.state_count() == 16);
  CHECK(sys.state(0) == StatePair{f0, f0});
  CHECK(sys.state(3) == StatePair{f0, kInf});
  CHECK(sys.state(sys.output_state()) == StatePair{kInf, kInf});
  for (int i = 0; i < sys.state_count(); ++i) CHECK(sys.index_of(sys.state(i)) == i);
  CHECK_THROWS_AS(sys.index_of(StatePair{Threshold::finite(3), f0}), DomainError);
  CHECK_THROWS_AS(build_system(0), DomainError);
}

TEST_CASE("entries of W follow the two edge rules") {
  for (int m = 1; m <= 5; ++m) {
    const StateSystem sys = build_system(m);
    for (int t = 0; t < sys.state_count(); ++t) {
      const StatePair target = sys.state(t);
      for (int s = 0; s < sys.state_count(); ++s) {
        const StatePair source = sys.state(s);
        ExactPoly expected;
        for (int k = 1; k <= m; ++k) {
          const auto q = target.q.minus(k);
          if (q && source == StatePair{Threshold::finite(m - k), *q}) expected += ExactPoly::monomial(Rational(oracle::left_blocks(k, target.p.is_infinite() ? -1 : target.p.value())), static_cast<std::size_t>(k));
        }
        const auto p = target.p.minus(1);
        if (p && source == StatePair{*p, Threshold::finite(m - 1)}) expected += ExactPoly::x();
        CHECK(sys.entry(t, s) == expected);
      }
    }
  }
}

TEST_CASE("component matrices for small m") {
  const StateSystem s2 = build_system(2);
  const Component* u2 = s2.find(ComponentTag::U);
  REQUIRE(u2);
  PolyMatrix w_u2(2, 2);
  w_u2 << ExactPoly{}, mono(1, 1), mono(1, 2), mono(1, 1);
  CHECK(component_matrix(s2, *u2) == w_u2);
  CHECK(bareiss_determinant(identity_minus(w_u2)) == ExactPoly{1, -1, 0, -1});

  const StateSystem s3 = build_system(3);
  const Component* u3 = s3.find(ComponentTag::U);
  const Component* v3 = s3.find(ComponentTag::V);
  REQUIRE(u3);
  REQUIRE(v3);
  PolyMatrix w_u3(3, 3);
  w_u3 << ExactPoly{}, ExactPoly{}, mono(1, 1),
          mono(1, 3), mono(1, 2), mono(1, 1),
          mono(2, 3), mono(1, 2), mono(1, 1);
  CHECK(component_matrix(s3, *u3) == w_u3);

  std::vector<StatePair> v_order{{f0, f2}, {f1, f0}, {f1, f2}, {f2, f0}, {f2, f1}};
  REQUIRE(v3->members.size() == v_order.size());
  for (std::size_t i = 0; i < v_order.size(); ++i) CHECK(s3.state(v3->members[i]) == v_order[i]);
  PolyMatrix w_v3(5, 5);
  const ExactPoly z, x = mono(1, 1), x2 = mono(1, 2);
  w_v3 << z, z, z, z, x,
          x, z, z, z, z,
          x, x2, z, z, x,
          z, z, x, z, z,
          z, z, x, x, z;
  CHECK(component_matrix(s3, *v3) == w_v3);
}

TEST_CASE("component classification matches the expected membership") {
  for (int m = 2; m <= 12; ++m) {
    const StateSystem sys = build_system(m);
    int cyclic = 0;
    for (const auto& c : sys.components()) {
      if (!c.cyclic) {
        CHECK(c.tag == ComponentTag::AcyclicSingleton);
        CHECK(c.members.size() == 1);
        continue;
      }
      ++cyclic;
      for (int v : c.members) {
        const StatePair s = sys.state(v);
        if (c.tag == ComponentTag::U) CHECK(oracle::in_u(m, s));
        if (c.tag == ComponentTag::V) CHECK(oracle::in_v(m, s));
        if (c.tag == ComponentTag::I) CHECK(oracle::in_i(m, s));
      }
    }
    CHECK(cyclic == 3);
    CHECK(sys.find(ComponentTag::U)->members.size() == static_cast<std::size_t>(expected_u_size(m)));
    CHECK(sys.find(ComponentTag::V)->members.size() == static_cast<std::size_t>(expected_v_size(m)));
    CHECK(sys.find(ComponentTag::I)->members.size() == 1);
  }
}

TEST_CASE("components come in topological order") {
  const StateSystem sys = build_system(6);
  for (const auto& e : sys.edges()) CHECK(sys.component_of(e.source) <= sys.component_of(e.target));
}

TEST_CASE("weighted periods agree with the simple-cycle oracle") {
  for (int m = 2; m <= 4; ++m) {
    const StateSystem sys = build_system(m);
    for (const auto& c : sys.components())
      if (c.cyclic) CHECK(c.weighted_period.value() == oracle::simple_cycle_period(sys, c));
  }
  const StateSystem s2 = build_system(2);
  CHECK(*s2.find(ComponentTag::V)->weighted_period == 2);
  CHECK(*s2.find(ComponentTag::U)->weighted_period == 1);
}

TEST_CASE("m = 1 has two untagged self-loop components") {
  const StateSystem sys = build_system(1);
  int untagged = 0;
  for (const auto& c : sys.components())
    if (c.cyclic) {
      CHECK(c.tag == ComponentTag::Untagged);
      ++untagged;
    }
  CHECK(untagged == 2);
  CHECK(sys.find(ComponentTag::U) == nullptr);
}

TEST_CASE("cyclic components reach the output state") {
  for (int m = 2; m <= 8; ++m) {
    const StateSystem sys = build_system(m);
    for (auto tag : {ComponentTag::U, ComponentTag::V, ComponentTag::I}) CHECK(output_accessible(sys, *sys.find(tag)));
  }
}

TEST_CASE("DOT rendering") {
  const std::string dot = to_dot(build_system(2));
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count("subgraph cluster_") == 3);
  CHECK(count("style=dashed") == 3);
  CHECK(count("color=red") + count("color=blue") == build_system(2).edges().size());
  CHECK(count("\"(inf,inf)\";") == 1);
}
