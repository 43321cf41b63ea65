// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alphaspec/bounds.hpp"
#include "alphaspec/canonical.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/matrix.hpp"
#include "alphaspec/parallel.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verify.hpp"
#include "oracles.hpp"

using namespace alphaspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int index;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

VerifyOptions options() {
  VerifyOptions opt;
  opt.workers = default_workers();
  return opt;
}

std::string summary(const TheoremReport& r) {
  std::ostringstream os;
  os << r.instances_checked << " checks";
  if (r.instances_skipped) os << ", " << r.instances_skipped << " skipped";
  if (r.certified_ties) os << ", " << r.certified_ties << " near-ties certified";
  os << ", " << r.violations.size() << " violations";
  if (r.smallest_gap) os << ", smallest gap " << format_number(*r.smallest_gap);
  return os.str();
}

std::string violation_breakdown(const TheoremReport& r) {
  std::map<std::string, int> by;
  for (const auto& v : r.violations) by[v.check + "/" + v.kind + "@alpha=" + format_number(v.alpha)] += 1;
  std::string s;
  for (const auto& [k, c] : by) s += (s.empty() ? "" : "; ") + k + " x" + std::to_string(c);
  return s;
}

Outcome from_report(const TheoremReport& r) {
  Outcome o{r.passed(), summary(r)};
  if (!r.passed()) o.detail += " [" + violation_breakdown(r) + "]";
  return o;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += "; FAILED: " + what;
  }
}

Outcome eigensolver() {
  Outcome o;
  double worst = 0.0;
  int graphs = 0;
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t m = 0; m < (1u << pairs); ++m, ++graphs) {
      const Graph g = oracle::mask_graph(n, m);
      for (double a : {0.0, 0.3, 0.5, 0.9}) {
        const auto jac = jacobi_eigensystem(a_alpha_matrix(g, Alpha(a))).values;
        const auto roots = oracle::real_roots(oracle::characteristic_polynomial(oracle::a_alpha_dense(g, a)));
        if (roots.size() != jac.size()) {
          require(o, false, "root count on " + graph6_encode(g));
          continue;
        }
        for (std::size_t i = 0; i < jac.size(); ++i) {
          worst = std::max(worst, std::abs(jac[i] - static_cast<double>(roots[i])));
        }
      }
    }
  }
  double worst_trace = 0.0;
  const auto corpus = random_corpus(1000, 1, 30, false, VerifyOptions{}.seed);
  const auto grid = default_alpha_grid();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const double a = grid[i % grid.size()];
    const auto ev = alpha_eigenvalues(g, Alpha(a));
    double t1 = 0.0, t2 = 0.0;
    for (double x : ev) {
      t1 += x;
      t2 += x * x;
    }
    const double m = g.size();
    const double z = static_cast<double>(structural_profile(g).zagreb());
    worst_trace = std::max({worst_trace, std::abs(t1 - 2.0 * a * m),
                            std::abs(t2 - (2.0 * (1 - a) * (1 - a) * m + a * a * z))});
  }
  o.detail = std::to_string(graphs) + " labelled graphs, max root error " + format_number(worst) +
             "; 1000 random graphs, max trace error " + format_number(worst_trace);
  require(o, worst <= 1e-10, "root error above 1e-10");
  require(o, worst_trace <= 1e-8, "trace error above 1e-8");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  double star_err = 0.0, cubic_err = 0.0;
  int t0_fail = 0;
  for (double a : default_alpha_grid()) {
    for (int n = 2; n <= 200; ++n) {
      star_err = std::max(star_err, std::abs(star_radius(n, Alpha(a)) - alpha_spectral_radius(star(n), Alpha(a))));
      if (n < 4) continue;
      const double root = rho_star_plus_edge(n, Alpha(a));
      cubic_err = std::max(cubic_err, std::abs(root - alpha_spectral_radius(star_plus_edge(n), Alpha(a))));
      if (!(root < star_plus_edge_t0(n, Alpha(a)))) ++t0_fail;
    }
  }
  o.detail = "star max error " + format_number(star_err) + ", cubic-root max error " + format_number(cubic_err) +
             ", root >= t0 in " + std::to_string(t0_fail) + " cases";
  require(o, star_err <= 1e-10, "star closed form");
  require(o, cubic_err <= 1e-9, "cubic root");
  require(o, t0_fail == 0, "root below t0");
  return o;
}

Outcome max_degree_bound() {
  const auto r = run_theorem("3.1", std::nullopt, options());
  Outcome o = from_report(r);
  std::set<std::pair<int, std::string>> cycles;
  for (const auto& w : r.equality_witnesses) {
    const Graph g = graph6_decode(w.graph6);
    require(o, is_cycle(g), "equality witness " + w.graph6 + " is not a cycle");
    cycles.emplace(g.order(), format_number(w.alpha));
  }
  o.detail += "; cycle witnesses " + std::to_string(cycles.size());
  require(o, cycles.size() == 7 * default_alpha_grid().size(), "every C_n, 3 <= n <= 9, attains equality");
  return o;
}

Outcome irregular_bounds() {
  const auto r = run_theorem("3.2", NRange{1, 7}, options());
  Outcome o = from_report(r);
  require(o, r.smallest_gap.value_or(0.0) > 1e-9, "strict slack above 1e-9");
  return o;
}

Outcome domination() {
  const auto r = run_theorem("3.3", NRange{2, 6}, options());
  Outcome o = from_report(r);
  std::set<std::string> families;
  for (const auto& w : r.equality_witnesses) {
    const Graph g = graph6_decode(w.graph6);
    const int n = g.order(), gamma = domination_number(g);
    const bool a = is_isomorphic(g, domination_extremal(n, gamma, DominationFamily::CompleteWithIsolated));
    const bool b = gamma >= 2 && (n - gamma) % 2 == 0 &&
                   is_isomorphic(g, domination_extremal(n, gamma, DominationFamily::MatchingComplement));
    require(o, a || b, "witness " + w.graph6 + " outside both families");
    families.insert(*w.family);
  }
  o.detail += "; " + std::to_string(r.equality_witnesses.size()) + " equality witnesses";
  require(o, families.size() == 2, "both families witnessed");
  return o;
}

Outcome tree_extremes() {
  const auto r = run_theorem("3.4", NRange{5, 10}, options());
  Outcome o = from_report(r);
  for (const auto& w : r.extremal_witnesses) {
    const Graph g = graph6_decode(w.graph6);
    const int n = g.order();
    if (w.role == "min") require(o, is_isomorphic(g, path(n)), "min is P_n");
    if (w.role == "max") require(o, is_isomorphic(g, star(n)), "max is S_n");
    if (w.role == "second-max") require(o, is_isomorphic(g, double_star(n, 1)), "runner-up is D_{n,1}");
    if (w.role == "diameter-max") require(o, is_isomorphic(g, diameter_tree(n, *w.parameter)), "T_{n,d}");
  }
  return o;
}

Outcome surgeries_and_pendants() {
  const auto lemmas = run_theorem("2.1", std::nullopt, options());
  const auto pendant = run_theorem("3.5", std::nullopt, options());
  Outcome o;
  o.pass = lemmas.passed() && pendant.passed();
  o.detail = "surgeries: " + summary(lemmas) + "; pendant paths: " + summary(pendant);
  int contradictions = 0;
  for (const auto& v : pendant.violations) contradictions += v.kind == "contradiction";
  if (!pendant.passed()) {
    o.detail += " [" + violation_breakdown(pendant) + "; " + std::to_string(contradictions) +
                " with the ordering reversed]";
  }
  if (!lemmas.passed()) o.detail += " [" + violation_breakdown(lemmas) + "]";
  return o;
}

Outcome gamma_extremes() {
  const auto all = run_theorem("4.1", NRange{2, 7}, options());
  const auto uni = run_theorem("4.2", NRange{4, 9}, options());
  const auto nb = run_theorem("4.3", NRange{4, 7}, options());
  Outcome o;
  o.pass = all.passed() && uni.passed() && nb.passed();
  o.detail = "all graphs: " + summary(all) + "; unicyclic: " + summary(uni) + "; non-bipartite: " + summary(nb);
  for (const auto* r : {&all, &uni, &nb}) {
    if (!r->passed()) o.detail += " [" + violation_breakdown(*r) + "]";
  }
  return o;
}

Outcome indices_bounds() {
  const auto r = run_theorem("indices", std::nullopt, options());
  Outcome o = from_report(r);
  bool k2 = false, c4 = false;
  for (const auto& w : r.equality_witnesses) {
    if (w.alpha != 0.0) continue;
    const Graph g = graph6_decode(w.graph6);
    k2 = k2 || (w.family == "energy-upper" && is_isomorphic(g, complete(2)));
    c4 = c4 || (w.family == "energy-lower-variance" && g.order() == 4 && is_isomorphic(g, cycle(4)));
  }
  require(o, k2, "K_2 attains the upper energy bound at alpha = 0");
  require(o, c4, "C_4 attains the variance lower bound at alpha = 0");
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const auto otter = oracle::otter_tree_counts(10);
  const auto uni = oracle::unicyclic_counts(7);
  const std::map<int, std::size_t> trees{{7, 11}, {8, 23}, {9, 47}, {10, 106}};
  const std::map<int, std::size_t> unicyclic{{5, 5}, {6, 13}, {7, 33}};
  const std::map<int, std::size_t> connected{{5, 21}, {6, 112}};
  std::ostringstream os;
  for (auto [n, want] : trees) {
    const auto got = enumerate({n, GraphClass::Trees}).size();
    require(o, got == want && otter[n] == want, "trees n=" + std::to_string(n));
    if (n <= 8) require(o, oracle::prufer_tree_classes(n) == want, "Prüfer trees n=" + std::to_string(n));
    os << "T" << n << "=" << got << " ";
  }
  for (auto [n, want] : unicyclic) {
    const auto got = enumerate({n, GraphClass::Unicyclic}).size();
    require(o, got == want && uni[n] == want, "unicyclic n=" + std::to_string(n));
    if (n <= 6) {
      const auto brute = oracle::brute_classes(
          n, [n](std::uint32_t m) { return oracle::mask_edges(m) == n && oracle::mask_connected(n, m); });
      require(o, brute == want, "brute unicyclic n=" + std::to_string(n));
    }
    os << "U" << n << "=" << got << " ";
  }
  for (auto [n, want] : connected) {
    const auto got = enumerate({n, GraphClass::Connected}).size();
    const auto brute = oracle::brute_classes(n, [n](std::uint32_t m) { return oracle::mask_connected(n, m); });
    require(o, got == want && brute == want, "connected n=" + std::to_string(n));
    os << "C" << n << "=" << got << " ";
  }
  o.detail = os.str() + (o.detail.empty() ? "matching both oracles" : o.detail);
  return o;
}

Outcome laplacian() {
  const auto r = run_theorem("laplacian", NRange{1, 7}, options());
  Outcome o = from_report(r);
  std::size_t bip = 0;
  for (const auto& w : r.equality_witnesses) bip += is_bipartite(graph6_decode(w.graph6));
  require(o, bip == r.equality_witnesses.size() && bip > 0, "equality witnesses are bipartite");
  o.detail += "; " + std::to_string(bip) + " bipartite equality witnesses";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "eigensolver vs characteristic-polynomial roots; trace identities", 60, eigensolver},
      {2, "star and S_n + e closed forms, root below t0", 60, closed_forms},
      {3, "maximum-degree bound on trees and unicyclic graphs, equality on cycles", 300, max_degree_bound},
      {4, "strict bounds for connected irregular graphs and their comparisons", 600, irregular_bounds},
      {5, "rho <= n - gamma on labelled graphs, equality families", 600, domination},
      {6, "extremal trees: P_n, S_n, D_{n,1}, T_{n,d}", 300, tree_extremes},
      {7, "pendant-path balancing and rewiring surgeries", 300, surgeries_and_pendants},
      {8, "Delta - rho maximisers S_n and S_n + e", 900, gamma_extremes},
      {9, "energy and Estrada bounds with tight cases", 120, indices_bounds},
      {10, "enumeration counts against independent oracles", 60, enumeration_counts},
      {11, "mu <= 2 rho_{1/2}, equality iff bipartite", 300, laplacian},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.index)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    failures += !o.pass;
    std::printf("%s [%2d] %s: %s (%.1fs, budget %.0fs)\n", o.pass ? "PASS" : "FAIL", c.index, c.title.c_str(),
                o.detail.c_str(), secs, c.budget_seconds);
    std::fflush(stdout);
  }
  return failures;
}
