#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphaspec/bounds.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/report.hpp"

namespace alphaspec {

struct NRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(NRange, NRange) = default;
};

/// "7" or "5..10". Throws GraphError on malformed text or lo > hi.
NRange parse_n_range(std::string_view text);
std::string to_string(NRange r);

/// {0, 0.1, ..., 0.9, 0.99}; 0.5 is already on the decimal grid.
std::vector<double> default_alpha_grid();
/// "default" or a comma list. Values must lie in [0, 1).
std::vector<double> parse_alpha_list(std::string_view text);

struct VerifyOptions {
  std::vector<double> alphas = default_alpha_grid();
  /// Strict inequalities whose statement carries a numeric margin must clear it.
  double strict_margin = kStrictMargin;
  double equality_window = kEqualityWindow;
  /// Perron entries closer than this are treated as ties and skipped.
  double perron_deadband = 1e-10;
  /// Settle strict orderings (uniqueness of extremal graphs, lemma surgeries)
  /// that fall inside the double-precision windows with the extended-precision
  /// eigensolver instead of reporting them.
  bool certify_ties = true;
  int workers = 1;
  std::uint64_t seed = 20190517;
  /// Directory for per-unit checkpoint files; empty disables checkpointing.
  std::string checkpoint_dir;
};

/// The rewiring surgeries over a corpus of connected graphs: moving
/// neighbours to a vertex with a larger Perron entry, the two-edge swap, and
/// contracting a cut edge into one side. Each must strictly increase rho.
TheoremReport verify_rewiring_lemmas(std::span<const Graph> corpus, const VerifyOptions& opt);

/// Over all trees on each n: P_n is the unique minimiser, S_n the unique
/// maximiser, D_{n,1} the unique runner-up, and T_{n,d} the unique maximiser
/// at each diameter d >= 3.
TheoremReport verify_tree_extremes(NRange n, const VerifyOptions& opt);

/// rho(G_u(p, q)) > rho(G_u(p+1, q-1)) at every vertex u, and the two-anchor
/// version at adjacent u, v of degree >= 2, for p >= q >= 1, p + q <= max_total.
TheoremReport verify_pendant_monotonicity(std::span<const Graph> bases, int max_total,
                                          const VerifyOptions& opt);

/// rho <= n - gamma over all labelled graphs, equality exactly on the two
/// extremal families.
TheoremReport verify_domination(NRange n, const VerifyOptions& opt);

enum class GammaClass { AllGraphs, Unicyclic, NonBipartite };
/// Delta - rho is maximised uniquely by S_n over all graphs and by S_n + e
/// over unicyclic and over non-bipartite graphs.
TheoremReport verify_gamma_extremes(NRange n, const VerifyOptions& opt,
                                    std::span<const GammaClass> classes = {});

/// Every listed bound on every graph of the corpus. Ids: "delta",
/// "irregular-diameter", "least-eigenvalue-gap", "shi-type", "k-connected"
/// (every k up to the connectivity), "comparisons", "rowsum" (every l).
TheoremReport verify_delta_and_irregular_bounds(std::span<const Graph> corpus,
                                                std::span<const std::string> bound_ids,
                                                const VerifyOptions& opt);

/// mu(G) <= 2 rho_{1/2}(G), equality exactly on bipartite graphs.
TheoremReport verify_laplacian(std::span<const Graph> corpus, const VerifyOptions& opt);

/// Energy and Estrada bounds over a corpus.
TheoremReport verify_indices(std::span<const Graph> corpus, const VerifyOptions& opt);

struct TheoremInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
  NRange default_range;
};
const std::vector<TheoremInfo>& known_theorems();
/// Canonical id for an id or alias; throws GraphError for unknown names.
std::string resolve_theorem_id(std::string_view name);

/// Runs one theorem over its standard corpus, split into work units that are
/// checkpointed when opt.checkpoint_dir is set.
TheoremReport run_theorem(std::string_view id, std::optional<NRange> range, const VerifyOptions& opt);

/// Recomputes the quantity a violation recorded; true when it matches within tol.
bool reproduces(const Violation& v, double tol = 1e-9);

}  // namespace alphaspec
