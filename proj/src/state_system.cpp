#include "bcat/state_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

#include "bcat/combinatorics.hpp"

namespace bcat {

std::string to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::U: return "U";
    case ComponentTag::V: return "V";
    case ComponentTag::I: return "I";
    case ComponentTag::AcyclicSingleton: return "acyclic_singleton";
    case ComponentTag::Untagged: return "untagged";
  }
  return "?";
}

StatePair StateSystem::state(int index) const {
  const int pi = index / (m_ + 1);
  const int qi = index % (m_ + 1);
  auto th = [this](int i) { return i == m_ ? kInf : Threshold::finite(i); };
  return {th(pi), th(qi)};
}

int StateSystem::index_of(const StatePair& s) const {
  if (!s.p.in_range(m_) || !s.q.in_range(m_)) throw DomainError("state " + s.to_string() + " outside B_m x B_m");
  auto idx = [this](Threshold t) { return t.is_infinite() ? m_ : t.value(); };
  return idx(s.p) * (m_ + 1) + idx(s.q);
}

std::span<const Edge> StateSystem::in_edges(int target) const {
  const auto t = static_cast<std::size_t>(target);
  return std::span<const Edge>(edges_).subspan(row_ptr_[t], row_ptr_[t + 1] - row_ptr_[t]);
}

std::span<const std::uint32_t> StateSystem::out_edge_ids(int source) const {
  const auto s = static_cast<std::size_t>(source);
  return std::span<const std::uint32_t>(out_ids_).subspan(out_ptr_[s], out_ptr_[s + 1] - out_ptr_[s]);
}

ExactPoly StateSystem::monomial(const Edge& e) const {
  return ExactPoly::monomial(Rational(coefficient(e)), static_cast<std::size_t>(e.degree));
}

ExactPoly StateSystem::entry(int target, int source) const {
  ExactPoly sum;
  for (const Edge& e : in_edges(target))
    if (e.source == source) sum += monomial(e);
  return sum;
}

const Component* StateSystem::find(ComponentTag tag) const {
  for (const auto& c : components_)
    if (c.tag == tag) return &c;
  return nullptr;
}

StateSystem::StateSystem(int m) : m_(m) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  const int width = m + 1;
  // Coefficient table: c_{k,p} at (k-1)*width + index(p), then the constant 1.
  coefficients_.reserve(static_cast<std::size_t>(m * width + 1));
  for (int k = 1; k <= m; ++k)
    for (int pi = 0; pi <= m; ++pi) coefficients_.push_back(c_kp(k, pi == m ? kInf : Threshold::finite(pi)));
  const auto one = static_cast<std::uint32_t>(coefficients_.size());
  coefficients_.emplace_back(1);

  const int n_states = state_count();
  row_ptr_.assign(static_cast<std::size_t>(n_states) + 1, 0);
  for (int t = 0; t < n_states; ++t) {
    const StatePair target = state(t);
    const int pi = t / width;
    for (int k = 1; k <= m; ++k) {
      const auto q_src = target.q.minus(k);
      if (!q_src) continue;
      const auto ci = static_cast<std::uint32_t>((k - 1) * width + pi);
      if (sgn(coefficients_[ci]) == 0) continue;
      const int s = index_of({Threshold::finite(m - k), *q_src});
      edges_.push_back({s, t, k, ci, EdgeKind::Split});
    }
    if (const auto p_src = target.p.minus(1)) {
      const int s = index_of({*p_src, Threshold::finite(m - 1)});
      edges_.push_back({s, t, 1, one, EdgeKind::Append});
    }
    auto row_begin = edges_.begin() + row_ptr_[static_cast<std::size_t>(t)];
    std::sort(row_begin, edges_.end(), [](const Edge& a, const Edge& b) {
      return a.source != b.source ? a.source < b.source : a.degree < b.degree;
    });
    row_ptr_[static_cast<std::size_t>(t) + 1] = static_cast<std::uint32_t>(edges_.size());
  }

  out_ptr_.assign(static_cast<std::size_t>(n_states) + 1, 0);
  for (const Edge& e : edges_) ++out_ptr_[static_cast<std::size_t>(e.source) + 1];
  std::partial_sum(out_ptr_.begin(), out_ptr_.end(), out_ptr_.begin());
  out_ids_.resize(edges_.size());
  std::vector<std::uint32_t> fill(out_ptr_.begin(), out_ptr_.end() - 1);
  for (std::uint32_t id = 0; id < edges_.size(); ++id)
    out_ids_[fill[static_cast<std::size_t>(edges_[id].source)]++] = id;

  components_ = scc_decompose(*this);
  component_index_.assign(static_cast<std::size_t>(n_states), -1);
  for (std::size_t ci = 0; ci < components_.size(); ++ci)
    for (int s : components_[ci].members) component_index_[static_cast<std::size_t>(s)] = static_cast<int>(ci);
}

StateSystem build_system(int m) { return StateSystem(m); }

namespace {

std::vector<int> expected_members(const StateSystem& sys, ComponentTag tag) {
  const int m = sys.m();
  std::vector<int> out;
  for (int s = 0; s < sys.state_count(); ++s) {
    const StatePair st = sys.state(s);
    bool in = false;
    switch (tag) {
      case ComponentTag::U: in = st.p.is_finite() && st.q.is_infinite(); break;
      case ComponentTag::V:
        in = st.p.is_finite() && st.q.is_finite() &&
             (st.q.value() < st.p.value() || (st.q.value() == m - 1 && st.p.value() <= m - 2));
        break;
      case ComponentTag::I: in = st.p.is_infinite() && st.q == Threshold::finite(m - 1); break;
      default: break;
    }
    if (in) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Component> scc_decompose(const StateSystem& sys) {
  const int n = sys.state_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> found;  // reverse topological order
  int counter = 0;

  // Iterative Tarjan over edges source -> target.
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = sys.out_edge_ids(f.v);
      if (f.next < out.size()) {
        const int w = sys.edge(out[f.next++]).target;
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          index[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = 1;
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], index[wi]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().v;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      }
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        std::vector<int> members;
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
    }
  }
  std::reverse(found.begin(), found.end());

  std::vector<Component> comps;
  comps.reserve(found.size());
  const int m = sys.m();
  std::vector<int> exp_u, exp_v, exp_i;
  if (m >= 2) {
    exp_u = expected_members(sys, ComponentTag::U);
    exp_v = expected_members(sys, ComponentTag::V);
    exp_i = expected_members(sys, ComponentTag::I);
  }
  for (auto& members : found) {
    Component c;
    c.members = std::move(members);
    c.cyclic = c.members.size() > 1;
    if (!c.cyclic) {
      for (const Edge& e : sys.in_edges(c.members.front()))
        if (e.source == c.members.front()) c.cyclic = true;
    }
    if (!c.cyclic) {
      c.tag = ComponentTag::AcyclicSingleton;
    } else if (m == 1) {
      c.tag = ComponentTag::Untagged;
    } else if (c.members == exp_u) {
      c.tag = ComponentTag::U;
    } else if (c.members == exp_v) {
      c.tag = ComponentTag::V;
    } else if (c.members == exp_i) {
      c.tag = ComponentTag::I;
    } else {
      std::string desc;
      for (int s : c.members) desc += sys.state(s).to_string();
      throw StructureError("unexpected cyclic component " + desc + " for m=" + std::to_string(m));
    }
    comps.push_back(std::move(c));
  }
  for (auto& c : comps)
    if (c.cyclic) c.weighted_period = weighted_period(sys, c);
  return comps;
}

int weighted_period(const StateSystem& sys, const Component& c) {
  if (!c.cyclic) throw DomainError("weighted period of an acyclic component");
  const int n = sys.state_count();
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  for (int s : c.members) inside[static_cast<std::size_t>(s)] = 1;
  std::vector<long> pot(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> bfs;
  bfs.push(c.members.front());
  seen[static_cast<std::size_t>(c.members.front())] = 1;
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    for (std::uint32_t id : sys.out_edge_ids(u)) {
      const Edge& e = sys.edge(id);
      const auto v = static_cast<std::size_t>(e.target);
      if (!inside[v] || seen[v]) continue;
      seen[v] = 1;
      pot[v] = pot[static_cast<std::size_t>(u)] + e.degree;
      bfs.push(e.target);
    }
  }
  long g = 0;
  for (int u : c.members)
    for (std::uint32_t id : sys.out_edge_ids(u)) {
      const Edge& e = sys.edge(id);
      if (!inside[static_cast<std::size_t>(e.target)]) continue;
      g = std::gcd(g, std::labs(pot[static_cast<std::size_t>(u)] + e.degree - pot[static_cast<std::size_t>(e.target)]));
    }
  return static_cast<int>(g);
}

bool output_accessible(const StateSystem& sys, const Component& c) {
  const int goal = sys.output_state();
  std::vector<char> seen(static_cast<std::size_t>(sys.state_count()), 0);
  std::vector<int> todo;
  for (int s : c.members) {
    seen[static_cast<std::size_t>(s)] = 1;
    todo.push_back(s);
  }
  while (!todo.empty()) {
    const int u = todo.back();
    todo.pop_back();
    if (u == goal) return true;
    for (std::uint32_t id : sys.out_edge_ids(u)) {
      const int v = sys.edge(id).target;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        todo.push_back(v);
      }
    }
  }
  return false;
}

PolyMatrix component_matrix(const StateSystem& sys, const Component& c) {
  const auto n = static_cast<Eigen::Index>(c.members.size());
  PolyMatrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      w(i, j) = sys.entry(c.members[static_cast<std::size_t>(i)], c.members[static_cast<std::size_t>(j)]);
  return w;
}

std::string to_dot(const StateSystem& sys) {
  std::ostringstream os;
  auto node = [&sys](int s) { return "\"" + sys.state(s).to_string() + "\""; };
  os << "digraph Gamma_" << sys.m() << " {\n";
  os << "  rankdir=LR;\n  node [shape=ellipse];\n";
  int cluster = 0;
  for (const auto& c : sys.components()) {
    if (!c.cyclic) continue;
    os << "  subgraph cluster_" << cluster++ << " {\n    style=dashed;\n";
    const std::string label = c.tag == ComponentTag::Untagged ? "cyclic" : to_string(c.tag) + "_" + std::to_string(sys.m());
    os << "    label=\"" << label << "\";\n";
    for (int s : c.members) os << "    " << node(s) << ";\n";
    os << "  }\n";
  }
  for (int s = 0; s < sys.state_count(); ++s)
    if (!sys.components()[static_cast<std::size_t>(sys.component_of(s))].cyclic) os << "  " << node(s) << ";\n";
  for (const Edge& e : sys.edges()) {
    os << "  " << node(e.source) << " -> " << node(e.target);
    if (e.kind == EdgeKind::Split) {
      os << " [style=dotted,color=red,label=\"k=" << e.degree << "\"];\n";
    } else {
      os << " [style=solid,color=blue];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bcat
