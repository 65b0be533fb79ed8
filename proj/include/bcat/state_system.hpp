#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcat/polynomial_eigen.hpp"
#include "bcat/threshold.hpp"

namespace bcat {

enum class EdgeKind : std::uint8_t { Split, Append };

/// One monomial coeff * x^degree of W, read as an edge source -> target.
struct Edge {
  std::int32_t source;
  std::int32_t target;
  std::int32_t degree;  ///< k for a k-split edge, 1 for an append edge
  std::uint32_t coeff;  ///< index into the system's coefficient table
  EdgeKind kind;
};

enum class ComponentTag { U, V, I, AcyclicSingleton, Untagged };

std::string to_string(ComponentTag tag);

/// A strongly connected component of the dependency graph.
struct Component {
  ComponentTag tag = ComponentTag::AcyclicSingleton;
  std::vector<int> members;  ///< canonical state order
  bool cyclic = false;
  std::optional<int> weighted_period;  ///< absent for acyclic components
};

/// Endpoint-state system F = x·1 + W(x) F for a fixed adjacency bound m.
///
/// States are the pairs in B_m × B_m, indexed lexicographically with ∞ last.
/// W is stored sparsely: each row (target) lists its monomials, one per edge.
/// Components are kept in topological order, sources before dependents.
class StateSystem {
 public:
  explicit StateSystem(int m);

  int m() const { return m_; }
  int state_count() const { return (m_ + 1) * (m_ + 1); }
  StatePair state(int index) const;
  int index_of(const StatePair& s) const;
  int output_state() const { return state_count() - 1; }

  std::span<const Edge> in_edges(int target) const;
  /// Indices into the edge array of edges leaving `source`.
  std::span<const std::uint32_t> out_edge_ids(int source) const;
  const Edge& edge(std::uint32_t id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  const BigInt& coefficient(const Edge& e) const { return coefficients_[e.coeff]; }
  ExactPoly monomial(const Edge& e) const;
  /// Entry W_{target, source}; zero polynomial if there is no edge.
  ExactPoly entry(int target, int source) const;

  const std::vector<Component>& components() const { return components_; }
  int component_of(int state) const { return component_index_[static_cast<std::size_t>(state)]; }
  /// Component carrying the tag, if any (tags U, V, I are unique).
  const Component* find(ComponentTag tag) const;

 private:
  int m_;
  std::vector<BigInt> coefficients_;
  std::vector<Edge> edges_;             // sorted by (target, source)
  std::vector<std::uint32_t> row_ptr_;  // CSR over targets
  std::vector<std::uint32_t> out_ids_;  // edge ids grouped by source
  std::vector<std::uint32_t> out_ptr_;
  std::vector<Component> components_;
  std::vector<int> component_index_;

  friend std::vector<Component> scc_decompose(const StateSystem& sys);
};

StateSystem build_system(int m);

/// Tarjan SCCs in topological order with U/V/I classification (m ≥ 2).
/// Throws StructureError if a cyclic component is not one of U_m, V_m, I_m.
std::vector<Component> scc_decompose(const StateSystem& sys);

/// gcd of total weights of closed walks, via potentials on a BFS tree.
int weighted_period(const StateSystem& sys, const Component& c);

/// Whether some member reaches the output state (∞, ∞).
bool output_accessible(const StateSystem& sys, const Component& c);

/// Principal submatrix W_C(x) in canonical member order.
PolyMatrix component_matrix(const StateSystem& sys, const Component& c);

/// Graphviz rendering of the dependency graph with cyclic components clustered.
std::string to_dot(const StateSystem& sys);

/// Expected sizes for m ≥ 2.
inline int expected_u_size(int m) { return m; }
inline int expected_v_size(int m) { return (m - 1) * (m + 2) / 2; }

}  // namespace bcat
