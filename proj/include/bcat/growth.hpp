#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "bcat/rational_function.hpp"
#include "bcat/state_system.hpp"

namespace bcat {

/// Closed interval [lo, hi] on the real line.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

/// W_C(x) for one cyclic component, with a fixed sparsity pattern whose
/// values are refreshed in place for each evaluation point.
class ComponentOperator {
 public:
  using Matrix = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

  ComponentOperator(const StateSystem& sys, const Component& c);

  Eigen::Index size() const { return matrix_.rows(); }
  double x() const { return x_; }
  /// Evaluates every entry at x > 0.
  void set_x(double x);
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
  std::vector<double> coeffs_;
  std::vector<int> degrees_;
  double x_ = 0.0;
};

/// Perron data of W_C(x): spr bracket from Collatz–Wielandt ratios and the
/// positive right vector they were taken from.
struct PerronState {
  double x = 0.0;
  Bracket spr;
  Eigen::VectorXd right_vector;
  int iterations = 0;
  bool converged = false;
};

/// Power iteration on W_C(x) + I. Stops once the bracket is narrower than tol,
/// or, when `decide` is set, as soon as the bracket excludes *decide.
PerronState perron_iterate(const ComponentOperator& op, double tol, const Eigen::VectorXd* warm = nullptr,
                           std::optional<double> decide = std::nullopt, int max_iterations = 2'000'000);

/// spr(W_C(x)) to within tol.
double spectral_radius_at(const StateSystem& sys, const Component& c, double x, double tol = 1e-10);

/// Unique r in (0, 1] with spr(W_C(r)) = 1.
struct RadiusResult {
  Bracket r;
  /// False when some bisection step had to fall back to a midpoint estimate.
  bool certified = true;
};
RadiusResult component_radius(const StateSystem& sys, const Component& c, double tol = 1e-10);

enum class Dominance { U, V, Tie, None };
std::string to_string(Dominance d);

struct GrowthReport {
  int m = 0;
  std::optional<Bracket> r_U;
  std::optional<Bracket> r_V;
  std::optional<double> lambda_U;
  std::optional<double> lambda_V;
  double alpha = 1.0;
  double rho = 1.0;
  double lower_bound = 1.0;
  Dominance dominant = Dominance::None;
  bool certified = true;
};

/// Radii of U_m and V_m and the growth constant α_m = max(λ_U, λ_V).
/// For m = 1 no component carries a tag and α = 1.
GrowthReport growth_constants(int m, double tol = 1e-10);
GrowthReport growth_constants(const StateSystem& sys, double tol = 1e-10);

/// Dominant pole of the reduced generating function and its residue constant.
struct PoleReport {
  int m = 0;
  Bracket rho;
  /// Empty when |D'(ρ)| is too small relative to the coefficients to decide.
  std::optional<bool> simple;
  std::optional<double> kappa;
  /// Smallest real positive root of the denominator beyond ρ. Complex poles
  /// are not searched, so this is only an upper estimate of the next modulus.
  std::optional<double> next_pole_modulus;
};

inline constexpr double kSimplePoleThreshold = 1e-6;

PoleReport dominant_pole_asymptotics(const RationalFunction& gf, int m, double tol = 1e-10);
PoleReport dominant_pole_asymptotics(int m, double tol = 1e-10);

/// C_{m-1}^{1/(m+1)}, evaluated in the log domain.
double catalan_lower_bound(int m);

}  // namespace bcat
