#include "doctest.h"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "alphaspec/canonical.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/parallel.hpp"
#include "alphaspec/precise.hpp"
#include "alphaspec/verify.hpp"

using namespace alphaspec;

namespace {

VerifyOptions small_grid() {
  VerifyOptions opt;
  opt.alphas = {0.0, 0.5, 0.9};
  return opt;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("alphaspec-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("n ranges and alpha lists") {
  CHECK(parse_n_range("7") == NRange{7, 7});
  CHECK(parse_n_range("5..10") == NRange{5, 10});
  CHECK(to_string(NRange{5, 10}) == "5..10");
  CHECK_THROWS_AS(parse_n_range("10..5"), GraphError);
  CHECK_THROWS_AS(parse_n_range("x"), GraphError);
  CHECK_THROWS_AS(parse_n_range("0"), GraphError);
  const auto grid = default_alpha_grid();
  REQUIRE(grid.size() == 11);
  CHECK(grid[5] == 0.5);
  CHECK(grid[10] == 0.99);
  CHECK(parse_alpha_list("0,0.5") == std::vector<double>{0.0, 0.5});
  CHECK_THROWS_AS(parse_alpha_list("1"), GraphError);
  CHECK_THROWS_AS(parse_alpha_list("0,,1"), GraphError);
}

TEST_CASE("theorem ids and aliases") {
  CHECK(resolve_theorem_id("3.7") == "3.4");
  CHECK(resolve_theorem_id("pendant") == "3.5");
  CHECK(resolve_theorem_id("4.2") == "4.2");
  CHECK_THROWS_AS(resolve_theorem_id("9.9"), GraphError);
}

TEST_CASE("extended precision agrees with double precision") {
  for (double a : {0.0, 0.37, 0.99}) {
    const Graph g = star_plus_edge(7);
    CHECK(precise_spectral_radius(g, Alpha(a)) == doctest::Approx(alpha_spectral_radius(g, Alpha(a))).epsilon(1e-13));
    const Graph h = diameter_tree(9, 4);
    CHECK(precise_radius_gap(g, h, Alpha(a)) ==
          doctest::Approx(alpha_spectral_radius(g, Alpha(a)) - alpha_spectral_radius(h, Alpha(a))).epsilon(1e-9));
  }
  CHECK(precise_radius_gap(cycle(6), cycle(6), Alpha(0.99)) == 0.0);
}

TEST_CASE("tree extremes: small runs, witnesses and the n = 4 note") {
  const auto rep = verify_tree_extremes({4, 7}, small_grid());
  CHECK(rep.passed());
  CHECK(rep.instances_checked > 0);
  bool vacuous = false;
  for (const auto& n : rep.notes) vacuous = vacuous || n.find("n=4") != std::string::npos;
  CHECK(vacuous);
  for (const auto& w : rep.extremal_witnesses) {
    const Graph g = graph6_decode(w.graph6);
    if (w.role == "max") CHECK(is_isomorphic(g, star(g.order())));
    if (w.role == "min") CHECK(is_isomorphic(g, path(g.order())));
    if (w.role == "diameter-max") CHECK(is_isomorphic(g, diameter_tree(g.order(), *w.parameter)));
  }
}

TEST_CASE("near ties in the tree comparisons are certified in extended precision") {
  VerifyOptions opt;
  opt.alphas = {0.99};
  const auto rep = verify_tree_extremes({10, 10}, opt);
  CHECK(rep.passed());
  CHECK(rep.certified_ties > 0);
  opt.certify_ties = false;
  const auto raw = verify_tree_extremes({10, 10}, opt);
  CHECK_FALSE(raw.passed());
  for (const auto& v : raw.violations) CHECK(v.kind == "below-margin");
}

TEST_CASE("rewiring surgeries increase rho on a small corpus") {
  auto corpus = random_corpus(30, 3, 6, true, 5);
  corpus.push_back(path(5));
  const auto rep = verify_rewiring_lemmas(corpus, small_grid());
  CHECK(rep.passed());
  CHECK(rep.instances_checked > 100);
}

TEST_CASE("pendant balancing on the triangle at moderate alpha") {
  const Graph bases[] = {complete(3), cycle(4)};
  const auto rep = verify_pendant_monotonicity(bases, 6, small_grid());
  CHECK(rep.passed());
  CHECK(rep.smallest_gap.value_or(0.0) > 1e-9);
}

TEST_CASE("domination: equality witnesses are exactly the two families") {
  const auto rep = verify_domination({2, 5}, small_grid());
  CHECK(rep.passed());
  REQUIRE_FALSE(rep.equality_witnesses.empty());
  for (const auto& w : rep.equality_witnesses) {
    const Graph g = graph6_decode(w.graph6);
    const int gamma = domination_number(g);
    bool member = is_isomorphic(g, domination_extremal(g.order(), gamma, DominationFamily::CompleteWithIsolated));
    if (gamma >= 2 && (g.order() - gamma) % 2 == 0) {
      member = member ||
               is_isomorphic(g, domination_extremal(g.order(), gamma, DominationFamily::MatchingComplement));
    }
    CHECK(member);
  }
}

TEST_CASE("gamma extremes: unicyclic and non-bipartite classes") {
  const GammaClass classes[] = {GammaClass::Unicyclic, GammaClass::NonBipartite};
  const auto rep = verify_gamma_extremes({4, 6}, small_grid(), classes);
  CHECK(rep.passed());
  for (const auto& w : rep.extremal_witnesses) {
    CHECK(is_isomorphic(graph6_decode(w.graph6), star_plus_edge(*w.parameter)));
  }
}

TEST_CASE("on two vertices the edgeless graph ties with the star") {
  const GammaClass all[] = {GammaClass::AllGraphs};
  const auto rep = verify_gamma_extremes({2, 2}, small_grid(), all);
  REQUIRE(rep.violations.size() == 3);
  CHECK(rep.violations[0].kind == "contradiction");
  CHECK(rep.violations[0].value == 0.0);
  CHECK(verify_gamma_extremes({3, 5}, small_grid(), all).passed());
}

TEST_CASE("a tightened margin produces reproducible violations") {
  VerifyOptions opt = small_grid();
  opt.strict_margin = 0.5;
  const Graph corpus[] = {star(5), double_star(7, 2), star_plus_edge(6)};
  const std::vector<std::string> ids{"irregular-diameter", "shi-type"};
  const auto rep = verify_delta_and_irregular_bounds(corpus, ids, opt);
  REQUIRE_FALSE(rep.passed());
  for (const auto& v : rep.violations) {
    CHECK(v.kind == "below-margin");
    CHECK(reproduces(v));
    Violation tampered = v;
    tampered.value += 1e-3;
    CHECK_FALSE(reproduces(tampered));
  }
}

TEST_CASE("reports round-trip through JSON at 12 significant digits") {
  TheoremReport r;
  r.theorem_id = "x";
  r.parameters["n"] = "3..4";
  r.instances_checked = 5;
  r.smallest_gap = 1.0 / 3.0;
  r.violations.push_back({"shi-type", "Cs", std::nullopt, 0.1, 2, 1e-10, "below-margin", "d"});
  r.extremal_witnesses.push_back({"max", "Cs", 0.5, 2.0, "star", std::nullopt});
  r.notes.push_back("note");
  const TheoremReport back = report_from_json(to_json(r));
  CHECK(back.smallest_gap == sig12(1.0 / 3.0));
  CHECK(to_json(back).dump() == to_json(r).dump());
  CHECK(report_from_json(to_json(back)) == back);
}

TEST_CASE("number formatting") {
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(std::sqrt(2.0)) == "1.41421356237");
  CHECK(sig12(sig12(M_PI)) == sig12(M_PI));
}

TEST_CASE("checkpointed runs resume to byte-identical reports") {
  VerifyOptions opt = small_grid();
  const auto dir = scratch_dir("ckpt");
  opt.checkpoint_dir = dir.string();
  const auto fresh = to_json(run_theorem("3.4", NRange{5, 7}, opt)).dump();
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 3);
  const auto resumed = to_json(run_theorem("3.4", NRange{5, 7}, opt)).dump();
  CHECK(fresh == resumed);
  // A partially completed run: drop one unit and resume.
  std::filesystem::remove(dir / "3.4--n6.json");
  CHECK(to_json(run_theorem("3.4", NRange{5, 7}, opt)).dump() == fresh);
  // Without checkpoints the same bytes come out.
  opt.checkpoint_dir.clear();
  CHECK(to_json(run_theorem("3.4", NRange{5, 7}, opt)).dump() == fresh);
  // Changed settings invalidate stale checkpoints.
  opt.checkpoint_dir = dir.string();
  opt.alphas = {0.0};
  const auto other = run_theorem("3.4", NRange{5, 7}, opt);
  CHECK(other.parameters.at("alphas") == "0");
  std::filesystem::remove_all(dir);
}

TEST_CASE("worker count does not change the report") {
  VerifyOptions opt = small_grid();
  opt.workers = 1;
  const auto one = to_json(run_theorem("2.1", std::nullopt, opt)).dump();
  opt.workers = 4;
  CHECK(to_json(run_theorem("2.1", std::nullopt, opt)).dump() == one);
}

TEST_CASE("parallel_map keeps index order and rethrows") {
  const auto out = parallel_map(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("boom");
                                 return 0;
                               }),
                  std::runtime_error);
  CHECK(default_workers() >= 1);
}
