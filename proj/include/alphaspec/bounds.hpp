#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "alphaspec/graph.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

/// Strict "<" bounds must clear the target by more than this.
inline constexpr double kStrictMargin = 1e-9;
/// A non-strict bound counts as attained when |slack| is within this window.
inline constexpr double kEqualityWindow = 1e-9;

enum class BoundDirection { Upper, Lower };
const char* to_string(BoundDirection d);

struct BoundEvaluation {
  std::string bound_id;
  /// Extra integer parameter (l for row sums, k for connectivity), if any.
  std::optional<int> parameter;
  double value = 0.0;
  bool applicable = false;
  /// Why the hypothesis failed; empty when applicable.
  std::string reason;
  BoundDirection direction = BoundDirection::Upper;
  bool strict = false;
  /// Quantity being bounded: "rho", "delta+least", "gamma", "energy", "estrada".
  std::string target = "rho";
  double target_value = 0.0;
  /// value - target for upper bounds, target - value for lower bounds.
  double slack = 0.0;
  /// Extremal family the graph structurally belongs to, when the bound names one.
  std::optional<std::string> equality_class;

  bool attained(double window = kEqualityWindow) const {
    return applicable && !strict && std::abs(slack) <= window;
  }
  /// True when inapplicable, or when the inequality holds at the given tolerance.
  bool satisfied(double margin = kStrictMargin, double window = kEqualityWindow) const {
    if (!applicable) return true;
    return strict ? slack > margin : slack >= -window;
  }
};

/// Quantities shared by every bound for one (graph, alpha) pair.
struct BoundContext {
  BoundContext(const Graph& g, Alpha alpha);

  Graph graph;
  Alpha alpha;
  StructuralProfile profile;
  std::vector<double> eigenvalues;  // non-increasing
  std::optional<int> diameter;

  double rho() const { return eigenvalues.front(); }
  double least() const { return eigenvalues.back(); }
};

BoundEvaluation rowsum_bound(const BoundContext& ctx, int l);
BoundEvaluation best_rowsum_bound(const BoundContext& ctx);
BoundEvaluation delta_bound(const BoundContext& ctx);
BoundEvaluation irregular_diameter_bound(const BoundContext& ctx);
BoundEvaluation least_eigenvalue_gap(const BoundContext& ctx);
BoundEvaluation shi_type_bound(const BoundContext& ctx);
/// Throws CapabilityError when the connectivity check exceeds its cap.
BoundEvaluation kconnected_bound(const BoundContext& ctx, int k);
/// Throws CapabilityError above the domination search cap.
BoundEvaluation domination_bound(const BoundContext& ctx);
BoundEvaluation gamma_star_evaluation(const BoundContext& ctx);
/// gamma_alpha(G) <= gamma_alpha(S_n + e), for unicyclic or for non-bipartite G.
BoundEvaluation gamma_unicyclic_evaluation(const BoundContext& ctx);
BoundEvaluation gamma_nonbipartite_evaluation(const BoundContext& ctx);

struct EnergyBounds {
  BoundEvaluation upper;
  BoundEvaluation lower_perron;    // 2 (lambda_1 - 2 alpha m / n)
  BoundEvaluation lower_variance;  // sqrt(2 (2(1-a)^2 m + a^2 (Z - 4m^2/n)))
};
EnergyBounds energy_bounds(const BoundContext& ctx);
BoundEvaluation estrada_upper(const BoundContext& ctx);

/// The three closed-form orderings between the strict upper bounds, next to
/// the numeric differences they are meant to predict.
struct BoundComparisons {
  int k = 0;
  /// [0] diameter bound <= Shi-type, [1] diameter bound <= k-connected,
  /// [2] Shi-type <= k-connected.
  std::array<bool, 3> predicate{};
  /// lhs value - rhs value for the same three pairs.
  std::array<double, 3> difference{};

  /// Each predicate matches the sign of its difference, ties within tol excused.
  bool consistent(double tol = kEqualityWindow) const;
};
/// Absent unless all three bounds apply. k defaults to the vertex connectivity.
std::optional<BoundComparisons> bound_comparisons(const BoundContext& ctx,
                                                  std::optional<int> k = std::nullopt);

/// Every bound above, inapplicable ones flagged rather than thrown.
std::vector<BoundEvaluation> all_bounds(const BoundContext& ctx);

// Convenience overloads building a context.
BoundEvaluation rowsum_bound(const Graph& g, Alpha alpha, int l);
BoundEvaluation best_rowsum_bound(const Graph& g, Alpha alpha);
BoundEvaluation delta_bound(const Graph& g, Alpha alpha);
BoundEvaluation irregular_diameter_bound(const Graph& g, Alpha alpha);
BoundEvaluation least_eigenvalue_gap(const Graph& g, Alpha alpha);
BoundEvaluation shi_type_bound(const Graph& g, Alpha alpha);
BoundEvaluation kconnected_bound(const Graph& g, Alpha alpha, int k);
BoundEvaluation domination_bound(const Graph& g, Alpha alpha);
EnergyBounds energy_bounds(const Graph& g, Alpha alpha);
BoundEvaluation estrada_upper(const Graph& g, Alpha alpha);
std::vector<BoundEvaluation> all_bounds(const Graph& g, Alpha alpha);

/// rho_alpha of the star on `order` vertices, closed form.
double star_radius(int order, Alpha alpha);
/// n - 1 - star_radius(n): the largest possible Delta - rho_alpha on n vertices.
double gamma_star_bound(int n, Alpha alpha);

/// h(t) = t^3 + c2 t^2 + c1 t + c0, whose largest root is rho_alpha(S_n + e).
struct CubicH {
  int n = 0;
  double alpha = 0.0;
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;

  double operator()(double t) const { return ((t + c2) * t + c1) * t + c0; }
  double derivative(double t) const { return (3.0 * t + 2.0 * c2) * t + c1; }
  /// Larger root of h'(t) = 0.
  double t1() const;
};

CubicH cubic_h(int n, Alpha alpha);
/// Largest root of h by bisection on [t1, n]; n = 3 gives rho(K_3) = 2.
/// Throws NumericError when the interval does not bracket a root.
double rho_star_plus_edge(int n, Alpha alpha);
/// Upper estimate for rho_alpha(S_n + e) used to rule out larger roots.
double star_plus_edge_t0(int n, Alpha alpha);

}  // namespace alphaspec
