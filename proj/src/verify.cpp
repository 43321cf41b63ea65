#include "alphaspec/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "alphaspec/canonical.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/parallel.hpp"
#include "alphaspec/precise.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

NRange parse_n_range(std::string_view text) {
  auto to_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw GraphError("bad n range '" + std::string(text) + "'; expected N or A..B");
    }
    return v;
  };
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo < 1 || r.lo > r.hi) throw GraphError("bad n range '" + std::string(text) + "'");
  return r;
}

std::string to_string(NRange r) {
  return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::vector<double> default_alpha_grid() {
  std::vector<double> out;
  for (int k = 0; k <= 9; ++k) out.push_back(k / 10.0);
  out.push_back(0.99);
  return out;
}

std::vector<double> parse_alpha_list(std::string_view text) {
  if (text == "default") return default_alpha_grid();
  std::vector<double> out;
  std::string buf(text);
  std::stringstream ss(buf);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double a = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw GraphError("bad alpha value '" + item + "'");
    }
    if (!(a >= 0.0 && a < 1.0)) throw GraphError("alpha values for verify must lie in [0, 1), got " + item);
    out.push_back(a);
  }
  if (out.empty()) throw GraphError("empty alpha list");
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("ALPHASPEC_WORKERS")) {
    int v = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size() && v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Below this an extended-precision gap is indistinguishable from zero.
constexpr double kPreciseFloor = 1e-35;

void require_alphas(const VerifyOptions& opt) {
  if (opt.alphas.empty()) throw GraphError("verify: empty alpha grid");
  for (double a : opt.alphas) {
    if (!(a >= 0.0 && a < 1.0)) throw GraphError("verify: alpha values must lie in [0, 1)");
  }
}

std::string alphas_text(const std::vector<double>& alphas) {
  std::string s;
  for (double a : alphas) {
    if (!s.empty()) s += ",";
    s += format_number(a);
  }
  return s;
}

double rho(const Graph& g, double alpha) { return alpha_spectral_radius(g, Alpha(alpha)); }

Violation violation(std::string check, const Graph& g, const Graph* partner, double alpha, double value,
                    std::string kind, std::string details, std::optional<int> parameter = {}) {
  Violation v;
  v.check = std::move(check);
  v.graph6 = graph6_encode(g);
  if (partner) v.partner = graph6_encode(*partner);
  v.alpha = alpha;
  v.parameter = parameter;
  v.value = value;
  v.kind = std::move(kind);
  v.details = std::move(details);
  return v;
}

enum class GapPolicy {
  // The claim carries an explicit numeric margin: gap must exceed it.
  Margin,
  // The claim is a strict ordering: near ties are settled in extended precision.
  Strict,
};

// Requires gap = q(graph) - q(partner) > 0 in the sense of `policy`.
// `precise` recomputes the gap in extended precision.
void check_gap(TheoremReport& rep, const VerifyOptions& opt, GapPolicy policy, const char* check,
               const Graph& graph, const Graph& partner, double alpha, double gap,
               const std::function<double()>& precise, const std::string& what,
               std::optional<int> parameter = {}) {
  rep.instances_checked += 1;
  if (gap > opt.strict_margin) {
    rep.observe_gap(gap);
    return;
  }
  if (policy == GapPolicy::Strict && !opt.certify_ties) {
    rep.observe_gap(gap);
    rep.violations.push_back(violation(check, graph, &partner, alpha, gap,
                                       gap > 0.0 ? "below-margin" : "contradiction",
                                       what + ": gap " + format_number(gap) + " inside the window",
                                       parameter));
    return;
  }
  const double exact = precise();
  rep.observe_gap(exact);
  if (policy == GapPolicy::Strict && exact > kPreciseFloor) {
    rep.certified_ties += 1;
    return;
  }
  if (exact > kPreciseFloor) {
    rep.violations.push_back(violation(
        check, graph, &partner, alpha, exact, "below-margin",
        what + ": holds with gap " + format_number(exact) + " (extended precision), below margin " +
            format_number(opt.strict_margin),
        parameter));
  } else {
    rep.violations.push_back(violation(check, graph, &partner, alpha, exact, "contradiction",
                                       what + ": gap " + format_number(exact) + " (extended precision)",
                                       parameter));
  }
}

void check_radius_gap(TheoremReport& rep, const VerifyOptions& opt, GapPolicy policy, const char* check,
                      const Graph& graph, const Graph& partner, double alpha, double rho_graph,
                      double rho_partner, const std::string& what) {
  check_gap(rep, opt, policy, check, graph, partner, alpha, rho_graph - rho_partner,
            [&] { return precise_radius_gap(graph, partner, Alpha(alpha)); }, what);
}

// Non-strict upper or lower bound: slack >= -window, with the equality
// classification compared against the structural family when given.
void check_bound(TheoremReport& rep, const VerifyOptions& opt, const BoundEvaluation& ev, const Graph& g,
                 double alpha, std::optional<bool> in_family = std::nullopt) {
  if (!ev.applicable) {
    rep.instances_skipped += 1;
    return;
  }
  rep.instances_checked += 1;
  if (ev.strict) {
    rep.observe_gap(ev.slack);
    if (ev.slack <= opt.strict_margin) {
      rep.violations.push_back(violation(ev.bound_id, g, nullptr, alpha, ev.slack,
                                         ev.slack > 0.0 ? "below-margin" : "contradiction",
                                         "strict bound slack " + format_number(ev.slack),
                                         ev.parameter));
    }
    return;
  }
  if (ev.slack < -opt.equality_window) {
    rep.violations.push_back(violation(ev.bound_id, g, nullptr, alpha, ev.slack, "contradiction",
                                       "bound exceeded, slack " + format_number(ev.slack), ev.parameter));
    return;
  }
  const bool attained = ev.attained(opt.equality_window);
  if (in_family && attained != *in_family) {
    rep.violations.push_back(violation(
        ev.bound_id, g, nullptr, alpha, ev.slack, "equality-mismatch",
        attained ? "bound attained outside the equality family" : "equality family member with slack " +
                                                                        format_number(ev.slack),
        ev.parameter));
  }
  if (attained) {
    Witness w;
    w.role = "equality";
    w.graph6 = graph6_encode(g.order() <= kCanonicalMaxOrder ? canonical_graph(g) : g);
    w.alpha = alpha;
    w.value = ev.value;
    w.family = ev.equality_class ? *ev.equality_class : ev.bound_id;
    w.parameter = ev.parameter;
    rep.equality_witnesses.push_back(std::move(w));
  }
}

// Keeps the first witness per (role, graph6, family, parameter).
void dedupe_witnesses(std::vector<Witness>& ws) {
  std::set<std::tuple<std::string, std::string, double, std::string, int>> seen;
  std::vector<Witness> out;
  for (auto& w : ws) {
    auto key = std::make_tuple(w.role, w.graph6, w.alpha, w.family.value_or(""), w.parameter.value_or(-1));
    if (seen.insert(key).second) out.push_back(std::move(w));
  }
  ws = std::move(out);
}

TheoremReport merge_all(const std::vector<TheoremReport>& parts) {
  TheoremReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

bool is_cut_edge(const Graph& g, Vertex u, Vertex v, int& side_u, int& side_v) {
  std::vector<int> seen(g.order(), 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  int count = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex y : g.neighbors(x)) {
      if ((x == u && y == v) || seen[y]) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  if (seen[v]) return false;
  side_u = count;
  side_v = g.order() - count;
  return true;
}

}  // namespace

TheoremReport verify_rewiring_lemmas(std::span<const Graph> corpus, const VerifyOptions& opt) {
  require_alphas(opt);
  auto parts = parallel_map(corpus.size(), opt.workers, [&](std::size_t i) {
    TheoremReport rep;
    const Graph& g = corpus[i];
    if (!is_connected(g) || g.order() < 3) {
      rep.instances_skipped += 1;
      return rep;
    }
    const int n = g.order();
    for (double a : opt.alphas) {
      const auto summary = spectrum(g, Alpha(a));
      const auto& x = *summary.perron;
      const double r = summary.rho;

      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          std::vector<Vertex> movable;
          for (Vertex w : g.neighbors(v)) {
            if (w != u && !g.adjacent(u, w)) movable.push_back(w);
          }
          if (movable.empty()) continue;
          const double diff = x[u] - x[v];
          if (std::abs(diff) <= opt.perron_deadband) {
            rep.instances_skipped += 1;
            continue;
          }
          if (diff < 0.0) continue;
          std::vector<std::vector<Vertex>> sets{movable};
          if (movable.size() > 1) {
            for (Vertex w : movable) sets.push_back({w});
          }
          for (const auto& s : sets) {
            const Graph h = move_neighbors(g, v, u, s);
            check_radius_gap(rep, opt, GapPolicy::Strict, "neighbour-move", h, g, a, rho(h, a), r,
                             "moving neighbours of " + std::to_string(v) + " to " + std::to_string(u));
          }
        }
      }

      const auto& edges = g.edges();
      for (std::size_t e1 = 0; e1 < edges.size(); ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < edges.size(); ++e2) {
          for (int o = 0; o < 4; ++o) {
            const Vertex u1 = (o & 1) ? edges[e1].second : edges[e1].first;
            const Vertex u2 = (o & 1) ? edges[e1].first : edges[e1].second;
            const Vertex v1 = (o & 2) ? edges[e2].second : edges[e2].first;
            const Vertex v2 = (o & 2) ? edges[e2].first : edges[e2].second;
            if (u1 == v1 || u1 == v2 || u2 == v1 || u2 == v2) continue;
            if (g.adjacent(u1, v2) || g.adjacent(v1, u2)) continue;
            const double d1 = x[u1] - x[v1];
            const double d2 = x[v2] - x[u2];
            if (d1 < -opt.perron_deadband || d2 < -opt.perron_deadband) continue;
            if (d1 <= opt.perron_deadband || d2 <= opt.perron_deadband) {
              rep.instances_skipped += 1;
              continue;
            }
            const Graph h = two_edge_swap(g, u1, u2, v1, v2);
            check_radius_gap(rep, opt, GapPolicy::Strict, "edge-swap", h, g, a, rho(h, a), r,
                             "two-edge swap");
          }
        }
      }

      for (auto [u, v] : edges) {
        int side_u = 0, side_v = 0;
        if (!is_cut_edge(g, u, v, side_u, side_v) || side_u < 2 || side_v < 2) continue;
        std::vector<Vertex> moved;
        for (Vertex w : g.neighbors(v)) {
          if (w != u) moved.push_back(w);
        }
        const Graph h = move_neighbors(g, v, u, moved);
        check_radius_gap(rep, opt, GapPolicy::Strict, "cut-edge-contraction", h, g, a, rho(h, a), r,
                         "contracting cut edge " + std::to_string(u) + "-" + std::to_string(v));
      }
    }
    return rep;
  });
  auto rep = merge_all(parts);
  rep.theorem_id = "2.1";
  return rep;
}

TheoremReport verify_tree_extremes(NRange range, const VerifyOptions& opt) {
  require_alphas(opt);
  TheoremReport rep;
  rep.theorem_id = "3.4";
  for (int n = std::max(range.lo, 4); n <= range.hi; ++n) {
    const auto trees = enumerate({n, GraphClass::Trees});
    const auto forms = parallel_map(trees.size(), opt.workers,
                                    [&](std::size_t i) { return canonical_form(trees[i]); });
    auto locate = [&](const Graph& family) {
      const auto f = canonical_form(family);
      return static_cast<std::size_t>(std::find(forms.begin(), forms.end(), f) - forms.begin());
    };
    const std::size_t ip = locate(path(n));
    const std::size_t is = locate(star(n));
    const std::size_t id = locate(double_star(n, 1));
    std::map<int, std::vector<std::size_t>> by_diameter;
    for (std::size_t i = 0; i < trees.size(); ++i) by_diameter[*diameter(trees[i])].push_back(i);
    std::map<int, std::size_t> t_index;
    for (int d = 3; d <= n - 1; ++d) t_index[d] = locate(diameter_tree(n, d));

    if (n == 4) {
      rep.notes.push_back("n=4: D_{4,1} = P_4 is the only tree other than the star; "
                          "uniqueness of the runner-up is vacuous");
    }
    std::size_t singletons = 0;
    for (const auto& [d, members] : by_diameter) {
      if (d >= 3 && members.size() == 1) ++singletons;
    }

    const auto radii = parallel_map(trees.size(), opt.workers, [&](std::size_t i) {
      std::vector<double> r;
      for (double a : opt.alphas) r.push_back(rho(trees[i], a));
      return r;
    });

    auto parts = parallel_map(opt.alphas.size(), opt.workers, [&](std::size_t k) {
      TheoremReport part;
      const double a = opt.alphas[k];
      auto r = [&](std::size_t i) { return radii[i][k]; };
      auto witness = [&](const char* role, std::size_t i, const char* family, std::optional<int> param) {
        Witness w;
        w.role = role;
        w.graph6 = graph6_encode(trees[i]);
        w.alpha = a;
        w.value = r(i);
        w.family = family;
        w.parameter = param;
        part.extremal_witnesses.push_back(std::move(w));
      };
      for (std::size_t j = 0; j < trees.size(); ++j) {
        if (j != ip) {
          check_radius_gap(part, opt, GapPolicy::Strict, "tree-min", trees[j], trees[ip], a, r(j), r(ip),
                           "P_n must be the unique minimiser");
        }
        if (j != is) {
          check_radius_gap(part, opt, GapPolicy::Strict, "tree-max", trees[is], trees[j], a, r(is), r(j),
                           "S_n must be the unique maximiser");
        }
        if (n >= 5 && j != is && j != id) {
          check_radius_gap(part, opt, GapPolicy::Strict, "tree-second", trees[id], trees[j], a, r(id), r(j),
                           "D_{n,1} must be the unique runner-up");
        }
      }
      witness("min", ip, "path", std::nullopt);
      witness("max", is, "star", std::nullopt);
      witness("second-max", id, "double-star-1", std::nullopt);
      for (const auto& [d, members] : by_diameter) {
        if (d < 3) continue;
        const std::size_t t = t_index.at(d);
        for (std::size_t j : members) {
          if (j == t) continue;
          check_radius_gap(part, opt, GapPolicy::Strict, "tree-diameter", trees[t], trees[j], a, r(t), r(j),
                           "T_{n,d} must be the unique maximiser at diameter " + std::to_string(d));
        }
        witness("diameter-max", t, "T_{n,d}", d);
      }
      return part;
    });
    for (const auto& p : parts) rep.merge(p);
    if (singletons > 0) {
      rep.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(singletons) +
                          " diameter class(es) hold a single tree");
    }
  }
  return rep;
}

TheoremReport verify_pendant_monotonicity(std::span<const Graph> bases, int max_total,
                                          const VerifyOptions& opt) {
  require_alphas(opt);
  auto parts = parallel_map(bases.size(), opt.workers, [&](std::size_t i) {
    TheoremReport rep;
    const Graph& base = bases[i];
    if (!is_connected(base) || base.size() < 1) {
      rep.instances_skipped += 1;
      return rep;
    }
    auto chain = [&](const std::vector<Vertex>& anchors, const char* check, double a) {
      for (int s = 2; s <= max_total; ++s) {
        std::vector<Graph> graphs;
        std::vector<double> radii;
        for (int q = 0; 2 * q <= s; ++q) {
          graphs.push_back(pendant_pair({base, anchors, s - q, q}));
          radii.push_back(rho(graphs.back(), a));
        }
        for (int q = 1; 2 * q <= s; ++q) {
          check_radius_gap(rep, opt, GapPolicy::Margin, check, graphs[q], graphs[q - 1], a, radii[q],
                           radii[q - 1],
                           "(p,q)=(" + std::to_string(s - q) + "," + std::to_string(q) + ") vs (" +
                               std::to_string(s - q + 1) + "," + std::to_string(q - 1) + ")");
        }
      }
    };
    for (double a : opt.alphas) {
      for (Vertex u = 0; u < base.order(); ++u) chain({u}, "pendant-single", a);
      for (auto [u, v] : base.edges()) {
        if (base.degree(u) < 2 || base.degree(v) < 2) continue;
        chain({u, v}, "pendant-adjacent", a);
        chain({v, u}, "pendant-adjacent", a);
      }
    }
    return rep;
  });
  auto rep = merge_all(parts);
  rep.theorem_id = "3.5";
  return rep;
}

TheoremReport verify_domination(NRange range, const VerifyOptions& opt) {
  require_alphas(opt);
  TheoremReport rep;
  rep.theorem_id = "3.3";
  for (int n = std::max(range.lo, 2); n <= range.hi; ++n) {
    // Canonical forms of the two families for every admissible gamma.
    std::map<CanonicalForm, std::string> family;
    std::set<int> family_sizes;
    for (int gamma = 1; gamma <= n - 1; ++gamma) {
      Graph a = domination_extremal(n, gamma, DominationFamily::CompleteWithIsolated);
      family_sizes.insert(a.size());
      family.emplace(canonical_form(a), "complete-with-isolated");
      if (gamma >= 2 && (n - gamma) % 2 == 0) {
        Graph b = domination_extremal(n, gamma, DominationFamily::MatchingComplement);
        family_sizes.insert(b.size());
        family.emplace(canonical_form(b), "matching-complement");
      }
    }
    const std::uint64_t total = labeled_count(n);
    constexpr std::uint64_t kChunk = 512;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    auto parts = parallel_map(chunks, opt.workers, [&](std::size_t c) {
      TheoremReport part;
      const std::uint64_t end = std::min<std::uint64_t>(total, (c + 1) * kChunk);
      for (std::uint64_t mask = c * kChunk; mask < end; ++mask) {
        const Graph g = labeled_graph(n, mask);
        const int gamma = domination_number(g);
        if (gamma > n - 1) {
          part.instances_skipped += 1;
          continue;
        }
        std::optional<std::string> member;
        if (family_sizes.count(g.size())) {
          auto it = family.find(canonical_form(g));
          if (it != family.end()) member = it->second;
        }
        for (double a : opt.alphas) {
          const double r = rho(g, a);
          BoundEvaluation b;
          b.bound_id = "domination";
          b.parameter = gamma;
          b.applicable = true;
          b.value = n - gamma;
          b.target_value = r;
          b.slack = b.value - r;
          b.equality_class = member;
          check_bound(part, opt, b, g, a, member.has_value());
        }
      }
      return part;
    });
    for (const auto& p : parts) rep.merge(p);
  }
  dedupe_witnesses(rep.equality_witnesses);
  return rep;
}

TheoremReport verify_gamma_extremes(NRange range, const VerifyOptions& opt, std::span<const GammaClass> classes) {
  require_alphas(opt);
  static constexpr GammaClass kAll[] = {GammaClass::AllGraphs, GammaClass::Unicyclic, GammaClass::NonBipartite};
  if (classes.empty()) classes = kAll;
  TheoremReport rep;
  rep.theorem_id = "4.1";
  for (GammaClass cls : classes) {
    const bool star_family = cls == GammaClass::AllGraphs;
    const int lo = std::max(range.lo, star_family ? 2 : 4);
    const int cap = cls == GammaClass::Unicyclic ? class_max_order(GraphClass::Unicyclic)
                                                 : class_max_order(GraphClass::All);
    const char* check = cls == GammaClass::AllGraphs ? "gamma-all"
                        : cls == GammaClass::Unicyclic ? "gamma-unicyclic" : "gamma-nonbipartite";
    for (int n = lo; n <= std::min(range.hi, cap); ++n) {
      std::vector<Graph> graphs;
      if (cls == GammaClass::Unicyclic) {
        graphs = enumerate({n, GraphClass::Unicyclic});
      } else {
        for (Graph& g : enumerate({n, GraphClass::All})) {
          if (cls == GammaClass::AllGraphs || !is_bipartite(g)) graphs.push_back(std::move(g));
        }
      }
      const Graph family_graph = star_family ? star(n) : star_plus_edge(n);
      const auto family_form = canonical_form(family_graph);
      std::size_t f = graphs.size();
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].size() == family_graph.size() && canonical_form(graphs[i]) == family_form) f = i;
      }
      if (f == graphs.size()) throw GraphError("extremal graph missing from its class");
      const auto radii = parallel_map(graphs.size(), opt.workers, [&](std::size_t i) {
        std::vector<double> r;
        for (double a : opt.alphas) r.push_back(rho(graphs[i], a));
        return r;
      });
      auto parts = parallel_map(opt.alphas.size(), opt.workers, [&](std::size_t k) {
        TheoremReport part;
        const double a = opt.alphas[k];
        auto gamma = [&](std::size_t i) { return max_degree(graphs[i]) - radii[i][k]; };
        const double closed = star_family ? gamma_star_bound(n, Alpha(a))
                                          : n - 1 - rho_star_plus_edge(n, Alpha(a));
        const double closed_tol = star_family ? 1e-10 : 1e-9;
        part.instances_checked += 1;
        if (std::abs(gamma(f) - closed) > closed_tol) {
          part.violations.push_back(violation(check, graphs[f], nullptr, a, gamma(f) - closed, "closed-form",
                                              "extremal value differs from its closed form by " +
                                                  format_number(gamma(f) - closed)));
        }
        for (std::size_t j = 0; j < graphs.size(); ++j) {
          if (j == f) continue;
          const int ddelta = max_degree(graphs[f]) - max_degree(graphs[j]);
          check_gap(part, opt, GapPolicy::Strict, check, graphs[f], graphs[j], a, gamma(f) - gamma(j),
                    [&] { return ddelta - precise_radius_gap(graphs[f], graphs[j], Alpha(a)); },
                    std::string(star_family ? "S_n" : "S_n + e") + " must uniquely maximise Delta - rho");
        }
        Witness w;
        w.role = "max";
        w.graph6 = graph6_encode(graphs[f]);
        w.alpha = a;
        w.value = gamma(f);
        w.family = star_family ? "star" : "star-plus-edge";
        w.parameter = n;
        part.extremal_witnesses.push_back(std::move(w));
        return part;
      });
      for (const auto& p : parts) rep.merge(p);
    }
  }
  return rep;
}

TheoremReport verify_delta_and_irregular_bounds(std::span<const Graph> corpus,
                                                std::span<const std::string> bound_ids,
                                                const VerifyOptions& opt) {
  require_alphas(opt);
  const std::set<std::string> ids(bound_ids.begin(), bound_ids.end());
  auto wants = [&](const char* id) { return ids.count(id) > 0; };
  auto parts = parallel_map(corpus.size(), opt.workers, [&](std::size_t i) {
    TheoremReport rep;
    const Graph& g = corpus[i];
    const bool small = g.order() <= kConnectivityMaxOrder;
    const int kappa = small && is_connected(g) ? vertex_connectivity(g) : 0;
    for (double a : opt.alphas) {
      const BoundContext ctx(g, Alpha(a));
      if (wants("delta")) {
        const auto ev = delta_bound(ctx);
        check_bound(rep, opt, ev, g, a, ev.equality_class.has_value());
      }
      if (wants("irregular-diameter")) check_bound(rep, opt, irregular_diameter_bound(ctx), g, a);
      if (wants("least-eigenvalue-gap")) check_bound(rep, opt, least_eigenvalue_gap(ctx), g, a);
      if (wants("shi-type")) check_bound(rep, opt, shi_type_bound(ctx), g, a);
      if (wants("k-connected") && !ctx.profile.regular) {
        for (int k = 1; k <= kappa; ++k) check_bound(rep, opt, kconnected_bound(ctx, k), g, a);
      }
      if (wants("comparisons")) {
        for (int k = 1; k <= kappa; ++k) {
          const auto c = bound_comparisons(ctx, k);
          if (!c) continue;
          rep.instances_checked += 1;
          for (int p = 0; p < 3; ++p) {
            BoundComparisons one = *c;
            for (int q = 0; q < 3; ++q) {
              if (q != p) one.difference[q] = 0.0;
            }
            if (one.consistent(opt.equality_window)) continue;
            rep.violations.push_back(violation(
                "comparison-" + std::to_string(p + 1), g, nullptr, a, c->difference[p], "contradiction",
                std::string("closed-form predicate says ") + (c->predicate[p] ? "<=" : ">") +
                    " but the bound values differ by " + format_number(c->difference[p]),
                k));
          }
        }
      }
      if (wants("rowsum") && g.order() >= 2) {
        for (int l = 1; l <= g.order(); ++l) {
          const auto ev = rowsum_bound(ctx, l);
          std::optional<bool> family;
          if (ctx.profile.connected) family = ev.equality_class.has_value();
          check_bound(rep, opt, ev, g, a, family);
        }
      }
    }
    return rep;
  });
  auto rep = merge_all(parts);
  dedupe_witnesses(rep.equality_witnesses);
  return rep;
}

TheoremReport verify_laplacian(std::span<const Graph> corpus, const VerifyOptions& opt) {
  auto parts = parallel_map(corpus.size(), opt.workers, [&](std::size_t i) {
    TheoremReport rep;
    const Graph& g = corpus[i];
    if (!is_connected(g)) {
      rep.instances_skipped += 1;
      return rep;
    }
    BoundEvaluation ev;
    ev.bound_id = "laplacian";
    ev.applicable = true;
    ev.value = 2.0 * rho(g, 0.5);
    ev.target = "mu";
    ev.target_value = laplacian_largest(g);
    ev.slack = ev.value - ev.target_value;
    const bool bipartite = is_bipartite(g);
    if (bipartite) ev.equality_class = "bipartite";
    check_bound(rep, opt, ev, g, 0.5, bipartite);
    return rep;
  });
  auto rep = merge_all(parts);
  rep.theorem_id = "laplacian";
  dedupe_witnesses(rep.equality_witnesses);
  return rep;
}

TheoremReport verify_indices(std::span<const Graph> corpus, const VerifyOptions& opt) {
  require_alphas(opt);
  auto parts = parallel_map(corpus.size(), opt.workers, [&](std::size_t i) {
    TheoremReport rep;
    const Graph& g = corpus[i];
    for (double a : opt.alphas) {
      const BoundContext ctx(g, Alpha(a));
      const auto e = energy_bounds(ctx);
      check_bound(rep, opt, e.upper, g, a);
      check_bound(rep, opt, e.lower_perron, g, a);
      check_bound(rep, opt, e.lower_variance, g, a);
      check_bound(rep, opt, estrada_upper(ctx), g, a);
    }
    return rep;
  });
  auto rep = merge_all(parts);
  rep.theorem_id = "indices";
  dedupe_witnesses(rep.equality_witnesses);
  return rep;
}

const std::vector<TheoremInfo>& known_theorems() {
  static const std::vector<TheoremInfo> table = {
      {"2.1", {"lemmas", "2.2", "c2.1"}, "rewiring surgeries and cut-edge contraction on a seeded corpus", {2, 6}},
      {"3.1", {"delta"}, "tree/unicyclic bound in the maximum degree, equality on cycles", {3, 10}},
      {"3.2", {"p3.1", "p3.2", "irregular", "comparisons"},
       "strict bounds for connected irregular graphs and their comparisons", {3, 7}},
      {"rowsum", {"row-sum"}, "row-sum bound for every l with its equality clause", {2, 7}},
      {"3.3", {"domination"}, "rho <= n - gamma over labelled graphs", {2, 6}},
      {"3.4", {"3.7", "trees"}, "extremal trees: P_n, S_n, D_{n,1}, T_{n,d}", {5, 10}},
      {"3.5", {"3.6", "pendant"}, "pendant path balancing decreases rho", {2, 6}},
      {"4.1", {}, "Delta - rho maximised by S_n over all graphs", {2, 7}},
      {"4.2", {}, "Delta - rho maximised by S_n + e over unicyclic graphs", {4, 9}},
      {"4.3", {}, "Delta - rho maximised by S_n + e over non-bipartite graphs", {4, 7}},
      {"laplacian", {"mu"}, "mu <= 2 rho_{1/2}, equality iff bipartite", {1, 7}},
      {"indices", {"energy", "estrada"}, "energy and Estrada bounds", {1, 6}},
  };
  return table;
}

std::string resolve_theorem_id(std::string_view name) {
  for (const auto& t : known_theorems()) {
    if (name == t.id) return t.id;
    for (const auto& a : t.aliases) {
      if (name == a) return t.id;
    }
  }
  throw GraphError("unknown theorem id '" + std::string(name) + "'");
}

namespace {

constexpr int kRandomLemmaGraphs = 200;
constexpr int kRandomIndexGraphs = 1000;
constexpr int kRandomIndexMaxOrder = 30;
constexpr int kPendantMaxTotal = 6;
constexpr std::size_t kCorpusChunk = 50;

std::vector<Graph> named_bases() {
  return {complete(2), complete(3), cycle(4), Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})};
}

std::vector<Graph> class_graphs(GraphClass cls, int n) { return enumerate({n, cls}); }

struct Unit {
  std::string key;
  std::function<TheoremReport()> run;
};

std::string fingerprint(const std::string& id, const std::string& key, const VerifyOptions& opt) {
  Json j;
  j["theorem"] = id;
  j["unit"] = key;
  j["alphas"] = alphas_text(opt.alphas);
  j["margin"] = format_number(opt.strict_margin);
  j["window"] = format_number(opt.equality_window);
  j["deadband"] = format_number(opt.perron_deadband);
  j["certify"] = opt.certify_ties;
  j["seed"] = opt.seed;
  j["format"] = 1;
  return j.dump();
}

TheoremReport run_unit(const std::string& id, const Unit& unit, const VerifyOptions& opt) {
  namespace fs = std::filesystem;
  if (opt.checkpoint_dir.empty()) return unit.run();
  const fs::path dir(opt.checkpoint_dir);
  fs::create_directories(dir);
  const fs::path file = dir / (id + "--" + unit.key + ".json");
  const std::string print = fingerprint(id, unit.key, opt);
  if (fs::exists(file)) {
    try {
      std::ifstream in(file);
      const Json j = Json::parse(in);
      if (j.at("fingerprint").get<std::string>() == print) return report_from_json(j.at("report"));
    } catch (const std::exception&) {
      // Unreadable checkpoints are recomputed.
    }
  }
  TheoremReport part = unit.run();
  // Round-trip through JSON so fresh and resumed runs emit identical bytes.
  Json j;
  j["fingerprint"] = print;
  j["report"] = to_json(part);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, file);
  return report_from_json(j["report"]);
}

std::vector<Unit> corpus_units(std::vector<Graph> corpus,
                               std::function<TheoremReport(std::span<const Graph>)> op) {
  auto shared = std::make_shared<std::vector<Graph>>(std::move(corpus));
  std::vector<Unit> units;
  for (std::size_t begin = 0; begin < shared->size(); begin += kCorpusChunk) {
    const std::size_t count = std::min(kCorpusChunk, shared->size() - begin);
    units.push_back({"chunk" + std::to_string(begin / kCorpusChunk),
                     [shared, begin, count, op] {
                       return op(std::span<const Graph>(*shared).subspan(begin, count));
                     }});
  }
  return units;
}

NRange clamp(NRange r, int lo, int hi) {
  return {std::max(r.lo, lo), std::min(r.hi, hi)};
}

}  // namespace

TheoremReport run_theorem(std::string_view name, std::optional<NRange> range, const VerifyOptions& opt) {
  require_alphas(opt);
  const std::string id = resolve_theorem_id(name);
  const auto& info = *std::find_if(known_theorems().begin(), known_theorems().end(),
                                   [&](const TheoremInfo& t) { return t.id == id; });
  const NRange r = range.value_or(info.default_range);

  TheoremReport rep;
  rep.parameters["n"] = to_string(r);
  rep.parameters["alphas"] = alphas_text(opt.alphas);
  rep.parameters["strict_margin"] = format_number(opt.strict_margin);
  rep.parameters["equality_window"] = format_number(opt.equality_window);
  rep.parameters["certify_ties"] = opt.certify_ties ? "true" : "false";

  std::vector<Unit> units;
  auto per_n = [&](NRange nr, const std::string& prefix, std::function<TheoremReport(int)> op) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      units.push_back({prefix + "n" + std::to_string(n), [op, n] { return op(n); }});
    }
  };
  auto bounds_on = [&](GraphClass cls, NRange nr, const std::string& prefix, std::vector<std::string> ids) {
    per_n(nr, prefix, [cls, ids, &opt](int n) {
      const auto graphs = class_graphs(cls, n);
      return verify_delta_and_irregular_bounds(graphs, ids, opt);
    });
  };

  if (id == "2.1") {
    rep.parameters["perron_deadband"] = format_number(opt.perron_deadband);
    rep.parameters["seed"] = std::to_string(opt.seed);
    auto corpus = named_bases();
    for (auto& g : random_corpus(kRandomLemmaGraphs, std::max(r.lo, 2), r.hi, true, opt.seed)) {
      corpus.push_back(std::move(g));
    }
    units = corpus_units(std::move(corpus), [&opt](std::span<const Graph> c) {
      return verify_rewiring_lemmas(c, opt);
    });
  } else if (id == "3.1") {
    const NRange trees = clamp(r, 3, class_max_order(GraphClass::Trees));
    const NRange uni = range ? clamp(r, 3, class_max_order(GraphClass::Unicyclic)) : NRange{3, 9};
    rep.parameters["n"] = "trees " + to_string(trees) + ", unicyclic " + to_string(uni);
    bounds_on(GraphClass::Trees, trees, "trees-", {"delta"});
    bounds_on(GraphClass::Unicyclic, uni, "unicyclic-", {"delta"});
  } else if (id == "3.2") {
    bounds_on(GraphClass::Connected, clamp(r, 2, class_max_order(GraphClass::Connected)), "",
              {"irregular-diameter", "least-eigenvalue-gap", "shi-type", "k-connected", "comparisons"});
  } else if (id == "rowsum") {
    bounds_on(GraphClass::All, clamp(r, 2, class_max_order(GraphClass::All)), "", {"rowsum"});
  } else if (id == "3.3") {
    per_n(clamp(r, 2, kLabeledMaxOrder), "", [&opt](int n) { return verify_domination({n, n}, opt); });
  } else if (id == "3.4") {
    per_n(clamp(r, 4, class_max_order(GraphClass::Trees)), "",
          [&opt](int n) { return verify_tree_extremes({n, n}, opt); });
  } else if (id == "3.5") {
    rep.parameters["seed"] = std::to_string(opt.seed);
    rep.parameters["max_total"] = std::to_string(kPendantMaxTotal);
    auto corpus = named_bases();
    for (auto& g : random_corpus(kRandomLemmaGraphs, std::max(r.lo, 2), r.hi, true, opt.seed)) {
      corpus.push_back(std::move(g));
    }
    units = corpus_units(std::move(corpus), [&opt](std::span<const Graph> c) {
      return verify_pendant_monotonicity(c, kPendantMaxTotal, opt);
    });
  } else if (id == "4.1" || id == "4.2" || id == "4.3") {
    const GammaClass cls = id == "4.1" ? GammaClass::AllGraphs
                           : id == "4.2" ? GammaClass::Unicyclic : GammaClass::NonBipartite;
    const int cap = cls == GammaClass::Unicyclic ? class_max_order(GraphClass::Unicyclic)
                                                 : class_max_order(GraphClass::All);
    per_n(clamp(r, cls == GammaClass::AllGraphs ? 2 : 4, cap), "", [&opt, cls](int n) {
      const GammaClass one[] = {cls};
      return verify_gamma_extremes({n, n}, opt, one);
    });
  } else if (id == "laplacian") {
    per_n(clamp(r, 1, class_max_order(GraphClass::Connected)), "", [&opt](int n) {
      const auto graphs = class_graphs(GraphClass::Connected, n);
      return verify_laplacian(graphs, opt);
    });
  } else if (id == "indices") {
    rep.parameters["seed"] = std::to_string(opt.seed);
    rep.parameters["random"] = std::to_string(kRandomIndexGraphs) + " graphs, n <= " +
                               std::to_string(kRandomIndexMaxOrder);
    per_n(clamp(r, 1, class_max_order(GraphClass::All)), "", [&opt](int n) {
      const auto graphs = class_graphs(GraphClass::All, n);
      return verify_indices(graphs, opt);
    });
    auto random = corpus_units(random_corpus(kRandomIndexGraphs, 1, kRandomIndexMaxOrder, false, opt.seed),
                               [&opt](std::span<const Graph> c) { return verify_indices(c, opt); });
    for (auto& u : random) {
      u.key = "random-" + u.key;
      units.push_back(std::move(u));
    }
  }

  for (const auto& unit : units) rep.merge(run_unit(id, unit, opt));
  rep.theorem_id = id;
  dedupe_witnesses(rep.equality_witnesses);
  if (rep.certified_ties > 0) {
    rep.notes.push_back(std::to_string(rep.certified_ties) +
                        " strict comparison(s) fell inside the double-precision window and were settled with " +
                        std::to_string(kPreciseDigits) + "-digit arithmetic");
  }
  return rep;
}

bool reproduces(const Violation& v, double tol) {
  const Graph g = graph6_decode(v.graph6);
  const Alpha a(v.alpha);
  std::optional<double> value;
  if (v.partner) {
    const Graph p = graph6_decode(*v.partner);
    if (v.check.rfind("gamma-", 0) == 0 && v.kind != "closed-form") {
      value = (max_degree(g) - alpha_spectral_radius(g, a)) - (max_degree(p) - alpha_spectral_radius(p, a));
    } else {
      value = alpha_spectral_radius(g, a) - alpha_spectral_radius(p, a);
    }
  } else if (v.check == "laplacian") {
    value = 2.0 * alpha_spectral_radius(g, Alpha(0.5)) - laplacian_largest(g);
  } else if (v.check.rfind("comparison-", 0) == 0) {
    const int p = v.check.back() - '1';
    const auto c = bound_comparisons(BoundContext(g, a), v.parameter);
    if (c) value = c->difference[p];
  } else if (v.check == "domination") {
    value = (g.order() - domination_number(g)) - alpha_spectral_radius(g, a);
  } else if (v.check == "gamma-all") {
    value = (max_degree(g) - alpha_spectral_radius(g, a)) - gamma_star_bound(g.order(), a);
  } else if (v.check == "gamma-unicyclic" || v.check == "gamma-nonbipartite") {
    value = (max_degree(g) - alpha_spectral_radius(g, a)) - (g.order() - 1 - rho_star_plus_edge(g.order(), a));
  } else {
    const BoundContext ctx(g, a);
    if (v.check == "rowsum" && v.parameter) {
      value = rowsum_bound(ctx, *v.parameter).slack;
    } else if (v.check == "k-connected" && v.parameter) {
      value = kconnected_bound(ctx, *v.parameter).slack;
    } else {
      for (const auto& ev : all_bounds(ctx)) {
        if (ev.bound_id == v.check && ev.applicable) value = ev.slack;
      }
    }
  }
  return value && std::abs(*value - v.value) <= tol;
}

}  // namespace alphaspec
