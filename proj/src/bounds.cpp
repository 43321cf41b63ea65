#include "alphaspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphaspec/canonical.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/generators.hpp"

namespace alphaspec {

const char* to_string(BoundDirection d) {
  return d == BoundDirection::Upper ? "upper" : "lower";
}

BoundContext::BoundContext(const Graph& g, Alpha a)
    : graph(g),
      alpha(a),
      profile(structural_profile(g)),
      eigenvalues(alpha_eigenvalues(g, a)),
      diameter(alphaspec::diameter(g)) {}

namespace {

BoundEvaluation make(const char* id, BoundDirection dir, bool strict, const char* target) {
  BoundEvaluation ev;
  ev.bound_id = id;
  ev.direction = dir;
  ev.strict = strict;
  ev.target = target;
  return ev;
}

BoundEvaluation& reject(BoundEvaluation& ev, std::string reason) {
  ev.applicable = false;
  ev.reason = std::move(reason);
  return ev;
}

BoundEvaluation& finish(BoundEvaluation& ev, double value, double target_value) {
  ev.applicable = true;
  ev.reason.clear();
  ev.value = value;
  ev.target_value = target_value;
  ev.slack = ev.direction == BoundDirection::Upper ? value - target_value : target_value - value;
  return ev;
}

// Shared hypothesis of the strict bounds: connected, irregular, alpha < 1.
bool irregular_hypothesis(const BoundContext& ctx, BoundEvaluation& ev) {
  if (ctx.alpha.is_one()) {
    reject(ev, "requires alpha < 1");
    return false;
  }
  if (!ctx.profile.connected) {
    reject(ev, "graph is disconnected");
    return false;
  }
  if (ctx.profile.regular) {
    reject(ev, "graph is regular");
    return false;
  }
  return true;
}

double diameter_bound_value(const BoundContext& ctx) {
  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double dd = *ctx.diameter;
  return ctx.profile.max_degree() - 2.0 * (1.0 - a) / ((2.0 * dd - a) * n);
}

double shi_value(const BoundContext& ctx) {
  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double dd = *ctx.diameter;
  const double big = ctx.profile.max_degree();
  const double small = ctx.profile.min_degree();
  const double avg = ctx.profile.average_degree();
  const double denom = dd * (n - small) / (1.0 - a) - dd * (dd - 1.0) / 2.0 / (1.0 - a) + 1.0 / (big - avg);
  return big - 1.0 / denom;
}

double kconnected_value(const BoundContext& ctx, int k) {
  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double m = ctx.profile.edge_count;
  const double big = ctx.profile.max_degree();
  const double kk = k;
  const double irregularity = n * big - 2.0 * m;
  const double beta = (1.0 - a) * irregularity * kk * kk /
                      (irregularity * (n * n - (big - kk + 2.0) * (n - kk)) + (1.0 - a) * n * kk * kk);
  return big - beta;
}

bool star_shaped(const StructuralProfile& p, int extra_edges) {
  const int n = p.order();
  return p.max_degree() == n - 1 && p.edge_count == n - 1 + extra_edges;
}

}  // namespace

BoundEvaluation rowsum_bound(const BoundContext& ctx, int l) {
  const auto& d = ctx.profile.degree_sequence;
  const int n = ctx.profile.order();
  if (n < 2) throw GraphError("rowsum_bound requires n >= 2");
  if (l < 1 || l > n) {
    throw GraphError("rowsum_bound: l must lie in [1, n], got " + std::to_string(l));
  }
  auto ev = make("rowsum", BoundDirection::Upper, false, "rho");
  ev.parameter = l;
  if (ctx.alpha.is_one()) return reject(ev, "requires alpha < 1");
  const double a = ctx.alpha.value();
  const double dl = d[l - 1];
  const double d1 = d[0];
  double excess = 0.0;
  for (int i = 0; i < l - 1; ++i) excess += d[i] - dl;
  const double root = std::sqrt((dl - a * d1 + 1.0 - a) * (dl - a * d1 + 1.0 - a) + 4.0 * (1.0 - a) * excess);
  finish(ev, (dl + a * d1 - (1.0 - a) + root) / 2.0, ctx.rho());

  if (ctx.profile.connected) {
    if (ctx.profile.regular) {
      ev.equality_class = "regular";
    } else {
      // d_1 = ... = d_{t-1} = n-1 > d_t = ... = d_n for some 2 <= t <= l.
      int t = 0;
      while (t < n && d[t] == n - 1) ++t;
      const bool tail_flat = t < n && d[t] == d[n - 1];
      if (t >= 1 && t + 1 <= l && tail_flat) ev.equality_class = "dominating-clique";
    }
  }
  return ev;
}

BoundEvaluation best_rowsum_bound(const BoundContext& ctx) {
  BoundEvaluation best = rowsum_bound(ctx, 1);
  if (!best.applicable) return best;
  for (int l = 2; l <= ctx.profile.order(); ++l) {
    auto ev = rowsum_bound(ctx, l);
    if (ev.value < best.value) best = std::move(ev);
  }
  return best;
}

BoundEvaluation delta_bound(const BoundContext& ctx) {
  auto ev = make("delta", BoundDirection::Upper, false, "rho");
  const auto kind = ctx.profile.kind;
  if (kind != GraphKind::Tree && kind != GraphKind::Unicyclic) {
    return reject(ev, "graph is neither a tree nor unicyclic");
  }
  const int big = ctx.profile.max_degree();
  if (big < 2) return reject(ev, "maximum degree below 2");
  const double a = ctx.alpha.value();
  finish(ev, a * big + 2.0 * (1.0 - a) * std::sqrt(big - 1.0), ctx.rho());
  if (ctx.alpha.is_one()) {
    ev.equality_class = "alpha-one";
  } else if (is_cycle(ctx.graph)) {
    ev.equality_class = "cycle";
  }
  return ev;
}

BoundEvaluation irregular_diameter_bound(const BoundContext& ctx) {
  auto ev = make("irregular-diameter", BoundDirection::Upper, true, "rho");
  if (!irregular_hypothesis(ctx, ev)) return ev;
  return finish(ev, diameter_bound_value(ctx), ctx.rho());
}

BoundEvaluation least_eigenvalue_gap(const BoundContext& ctx) {
  auto ev = make("least-eigenvalue-gap", BoundDirection::Lower, true, "delta+least");
  if (!irregular_hypothesis(ctx, ev)) return ev;
  const double a = ctx.alpha.value();
  const double value = 2.0 * (1.0 - a) / ((2.0 * *ctx.diameter - a) * ctx.profile.order());
  return finish(ev, value, ctx.profile.max_degree() + ctx.least());
}

BoundEvaluation shi_type_bound(const BoundContext& ctx) {
  auto ev = make("shi-type", BoundDirection::Upper, true, "rho");
  if (!irregular_hypothesis(ctx, ev)) return ev;
  return finish(ev, shi_value(ctx), ctx.rho());
}

BoundEvaluation kconnected_bound(const BoundContext& ctx, int k) {
  if (k < 1) throw GraphError("kconnected_bound: k must be >= 1");
  auto ev = make("k-connected", BoundDirection::Upper, true, "rho");
  ev.parameter = k;
  if (!irregular_hypothesis(ctx, ev)) return ev;
  if (!is_k_connected(ctx.graph, k)) {
    return reject(ev, "graph is not " + std::to_string(k) + "-connected");
  }
  return finish(ev, kconnected_value(ctx, k), ctx.rho());
}

BoundEvaluation domination_bound(const BoundContext& ctx) {
  auto ev = make("domination", BoundDirection::Upper, false, "rho");
  if (ctx.alpha.is_one()) return reject(ev, "requires alpha < 1");
  const int n = ctx.profile.order();
  const int gamma = domination_number(ctx.graph);
  ev.parameter = gamma;
  if (gamma > n - 1) return reject(ev, "domination number equals n");
  finish(ev, n - gamma, ctx.rho());
  if (n <= kCanonicalMaxOrder) {
    if (is_isomorphic(ctx.graph, domination_extremal(n, gamma, DominationFamily::CompleteWithIsolated))) {
      ev.equality_class = "complete-with-isolated";
    } else if (gamma >= 2 && (n - gamma) % 2 == 0 &&
               is_isomorphic(ctx.graph,
                             domination_extremal(n, gamma, DominationFamily::MatchingComplement))) {
      ev.equality_class = "matching-complement";
    }
  }
  return ev;
}

BoundEvaluation gamma_star_evaluation(const BoundContext& ctx) {
  auto ev = make("gamma-star", BoundDirection::Upper, false, "gamma");
  if (ctx.alpha.is_one()) return reject(ev, "requires alpha < 1");
  const int n = ctx.profile.order();
  if (n < 2) return reject(ev, "requires n >= 2");
  finish(ev, gamma_star_bound(n, ctx.alpha), ctx.profile.max_degree() - ctx.rho());
  if (star_shaped(ctx.profile, 0)) ev.equality_class = "star";
  return ev;
}

namespace {

BoundEvaluation gamma_star_plus_edge(const BoundContext& ctx, const char* id, bool hypothesis,
                                     const char* why_not) {
  auto ev = make(id, BoundDirection::Upper, false, "gamma");
  if (ctx.alpha.is_one()) return reject(ev, "requires alpha < 1");
  const int n = ctx.profile.order();
  if (n < 4) return reject(ev, "requires n >= 4");
  if (!hypothesis) return reject(ev, why_not);
  finish(ev, n - 1 - rho_star_plus_edge(n, ctx.alpha), ctx.profile.max_degree() - ctx.rho());
  if (star_shaped(ctx.profile, 1)) ev.equality_class = "star-plus-edge";
  return ev;
}

}  // namespace

BoundEvaluation gamma_unicyclic_evaluation(const BoundContext& ctx) {
  return gamma_star_plus_edge(ctx, "gamma-unicyclic", ctx.profile.kind == GraphKind::Unicyclic,
                              "graph is not unicyclic");
}

BoundEvaluation gamma_nonbipartite_evaluation(const BoundContext& ctx) {
  return gamma_star_plus_edge(ctx, "gamma-nonbipartite", !ctx.profile.bipartite, "graph is bipartite");
}

EnergyBounds energy_bounds(const BoundContext& ctx) {
  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double m = ctx.profile.edge_count;
  const double z = static_cast<double>(ctx.profile.zagreb());
  const double energy = indices_from_spectrum(ctx.graph, ctx.alpha, ctx.eigenvalues).energy;

  EnergyBounds out;
  out.upper = make("energy-upper", BoundDirection::Upper, false, "energy");
  const double spread = 2.0 * (1.0 - a) * (1.0 - a) * m * n + a * a * (n * z - 4.0 * m * m);
  finish(out.upper, std::sqrt(std::max(0.0, spread)), energy);

  out.lower_perron = make("energy-lower-perron", BoundDirection::Lower, false, "energy");
  finish(out.lower_perron, 2.0 * (ctx.rho() - 2.0 * a * m / n), energy);

  out.lower_variance = make("energy-lower-variance", BoundDirection::Lower, false, "energy");
  const double variance = 2.0 * (1.0 - a) * (1.0 - a) * m + a * a * (z - 4.0 * m * m / n);
  finish(out.lower_variance, std::sqrt(std::max(0.0, 2.0 * variance)), energy);
  return out;
}

BoundEvaluation estrada_upper(const BoundContext& ctx) {
  auto ev = make("estrada-upper", BoundDirection::Upper, false, "estrada");
  if (ctx.profile.edge_count < 1) return reject(ev, "graph has no edges");
  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double m = ctx.profile.edge_count;
  const double z = static_cast<double>(ctx.profile.zagreb());
  const double s = std::sqrt(2.0 * (1.0 - a) * (1.0 - a) * m + a * a * z);
  const double estrada = indices_from_spectrum(ctx.graph, ctx.alpha, ctx.eigenvalues).estrada;
  return finish(ev, n - 1.0 + 2.0 * a * m - s + std::exp(s), estrada);
}

bool BoundComparisons::consistent(double tol) const {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(difference[i]) <= tol) continue;
    if (predicate[i] != (difference[i] <= 0.0)) return false;
  }
  return true;
}

std::optional<BoundComparisons> bound_comparisons(const BoundContext& ctx, std::optional<int> k) {
  auto probe = make("comparison", BoundDirection::Upper, true, "rho");
  if (!irregular_hypothesis(ctx, probe)) return std::nullopt;
  const int kk = k ? *k : vertex_connectivity(ctx.graph);
  if (kk < 1 || !is_k_connected(ctx.graph, kk)) return std::nullopt;

  const double a = ctx.alpha.value();
  const double n = ctx.profile.order();
  const double m = ctx.profile.edge_count;
  const double big = ctx.profile.max_degree();
  const double small = ctx.profile.min_degree();
  const double avg = ctx.profile.average_degree();
  const double dd = *ctx.diameter;
  const double kd = kk;
  const double irregularity = n * big - 2.0 * m;

  BoundComparisons out;
  out.k = kk;
  out.predicate[0] = (big - avg) * (2.0 * dd * small + dd * (dd - 1.0) - a * n) <= 2.0 * (1.0 - a);
  out.predicate[1] = 2.0 * n * n + 2.0 * (1.0 - a) * n * kd * kd / irregularity >=
                     n * (2.0 * dd - a) * kd * kd + 2.0 * (big - kd + 2.0) * (n - kd);
  out.predicate[2] = kd * kd * dd * (2.0 * n - 2.0 * small - dd + 1.0) <=
                     2.0 * n * n - 2.0 * (big - kd + 2.0) * (n - kd);

  const double b_diam = diameter_bound_value(ctx);
  const double b_shi = shi_value(ctx);
  const double b_k = kconnected_value(ctx, kk);
  out.difference = {b_diam - b_shi, b_diam - b_k, b_shi - b_k};
  return out;
}

std::vector<BoundEvaluation> all_bounds(const BoundContext& ctx) {
  std::vector<BoundEvaluation> out;
  if (ctx.profile.order() >= 2) {
    out.push_back(best_rowsum_bound(ctx));
  } else {
    auto ev = make("rowsum", BoundDirection::Upper, false, "rho");
    out.push_back(reject(ev, "requires n >= 2"));
  }
  out.push_back(delta_bound(ctx));
  out.push_back(irregular_diameter_bound(ctx));
  out.push_back(least_eigenvalue_gap(ctx));
  out.push_back(shi_type_bound(ctx));

  auto kc = make("k-connected", BoundDirection::Upper, true, "rho");
  if (irregular_hypothesis(ctx, kc)) {
    if (ctx.profile.order() > kConnectivityMaxOrder) {
      reject(kc, "connectivity check limited to n <= " + std::to_string(kConnectivityMaxOrder));
    } else {
      kc = kconnected_bound(ctx, vertex_connectivity(ctx.graph));
    }
  }
  out.push_back(std::move(kc));

  if (ctx.profile.order() > kDominationMaxOrder) {
    auto ev = make("domination", BoundDirection::Upper, false, "rho");
    out.push_back(reject(ev, "domination search limited to n <= " + std::to_string(kDominationMaxOrder)));
  } else {
    out.push_back(domination_bound(ctx));
  }

  out.push_back(gamma_star_evaluation(ctx));
  out.push_back(gamma_unicyclic_evaluation(ctx));
  out.push_back(gamma_nonbipartite_evaluation(ctx));
  auto energy = energy_bounds(ctx);
  out.push_back(std::move(energy.upper));
  out.push_back(std::move(energy.lower_perron));
  out.push_back(std::move(energy.lower_variance));
  out.push_back(estrada_upper(ctx));
  return out;
}

BoundEvaluation rowsum_bound(const Graph& g, Alpha alpha, int l) { return rowsum_bound(BoundContext(g, alpha), l); }
BoundEvaluation best_rowsum_bound(const Graph& g, Alpha alpha) { return best_rowsum_bound(BoundContext(g, alpha)); }
BoundEvaluation delta_bound(const Graph& g, Alpha alpha) { return delta_bound(BoundContext(g, alpha)); }
BoundEvaluation irregular_diameter_bound(const Graph& g, Alpha alpha) {
  return irregular_diameter_bound(BoundContext(g, alpha));
}
BoundEvaluation least_eigenvalue_gap(const Graph& g, Alpha alpha) {
  return least_eigenvalue_gap(BoundContext(g, alpha));
}
BoundEvaluation shi_type_bound(const Graph& g, Alpha alpha) { return shi_type_bound(BoundContext(g, alpha)); }
BoundEvaluation kconnected_bound(const Graph& g, Alpha alpha, int k) {
  return kconnected_bound(BoundContext(g, alpha), k);
}
BoundEvaluation domination_bound(const Graph& g, Alpha alpha) { return domination_bound(BoundContext(g, alpha)); }
EnergyBounds energy_bounds(const Graph& g, Alpha alpha) { return energy_bounds(BoundContext(g, alpha)); }
BoundEvaluation estrada_upper(const Graph& g, Alpha alpha) { return estrada_upper(BoundContext(g, alpha)); }
std::vector<BoundEvaluation> all_bounds(const Graph& g, Alpha alpha) { return all_bounds(BoundContext(g, alpha)); }

double star_radius(int order, Alpha alpha) {
  if (order < 2) throw GraphError("star_radius: the star needs at least 2 vertices");
  const double a = alpha.value();
  const double n = order;
  return (a * n + std::sqrt(a * a * n * n + 4.0 * (1.0 - 2.0 * a) * (n - 1.0))) / 2.0;
}

double gamma_star_bound(int n, Alpha alpha) {
  if (n < 2) throw GraphError("gamma_star_bound: n must be >= 2");
  alpha.require_below_one("gamma_star_bound");
  return n - 1.0 - star_radius(n, alpha);
}

CubicH cubic_h(int n, Alpha alpha) {
  if (n < 4) throw GraphError("cubic_h: n must be >= 4");
  alpha.require_below_one("cubic_h");
  const double a = alpha.value();
  const double nn = n;
  CubicH h;
  h.n = n;
  h.alpha = a;
  h.c2 = -(a * (nn + 1.0) + 1.0);
  h.c1 = (a * a + 3.0 * a - 1.0) * (nn - 1.0) + a * (a + 1.0);
  h.c0 = (1.0 - 2.0 * a) * (a + 1.0) * (nn - 1.0) - 2.0 * (1.0 - a) * (1.0 - a);
  return h;
}

double CubicH::t1() const {
  const double disc = c2 * c2 - 3.0 * c1;
  if (disc < 0.0) throw NumericError("h' has no real roots", 0, disc);
  return (-c2 + std::sqrt(disc)) / 3.0;
}

double rho_star_plus_edge(int n, Alpha alpha) {
  alpha.require_below_one("rho_star_plus_edge");
  if (n == 3) return 2.0;
  const CubicH h = cubic_h(n, alpha);
  double lo = h.t1();
  double hi = n;
  if (!(h(lo) <= 0.0 && h(hi) > 0.0)) {
    throw NumericError("h is not bracketed on [t1, n]", 0, h(hi));
  }
  int it = 0;
  for (; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (h(mid) > 0.0 ? hi : lo) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

double star_plus_edge_t0(int n, Alpha alpha) {
  const double a = alpha.value();
  const double nn = n;
  return 1.0 + a * (nn - 1.0) / 2.0 +
         std::sqrt(a * a * (nn - 1.0) * (nn - 1.0) + 4.0 * (1.0 - 2.0 * a) * (nn - 2.0)) / 2.0;
}

}  // namespace alphaspec
