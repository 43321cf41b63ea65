#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "alphaspec/errors.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/matrix.hpp"
#include "alphaspec/spectral.hpp"
#include "oracles.hpp"

using namespace alphaspec;

namespace {

void check_against_char_poly(const Graph& g, double alpha, double tol) {
  const auto poly = oracle::characteristic_polynomial(oracle::a_alpha_dense(g, alpha));
  const auto roots = oracle::real_roots(poly);
  const auto ev = alpha_eigenvalues(g, Alpha(alpha));
  CAPTURE(alpha);
  CAPTURE(g.edges().size());
  REQUIRE(roots.size() == ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    REQUIRE(std::abs(ev[i] - static_cast<double>(roots[i])) <= tol);
  }
}

}  // namespace

TEST_CASE("alpha is validated") {
  CHECK_THROWS_AS(Alpha(-0.1), GraphError);
  CHECK_THROWS_AS(Alpha(1.5), GraphError);
  CHECK_THROWS_AS(Alpha(std::nan("")), GraphError);
  CHECK_NOTHROW(Alpha(1.0));
  CHECK_THROWS_AS(Alpha(1.0).require_below_one("test"), GraphError);
}

TEST_CASE("eigenvalues match characteristic polynomial roots on every labelled graph n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t m = 0; m < (1u << pairs); ++m) {
      for (double a : {0.0, 0.3, 0.5, 0.9, 1.0}) {
        check_against_char_poly(oracle::mask_graph(n, m), a, 1e-10);
      }
    }
  }
}

TEST_CASE("closed-form spectra of standard families") {
  // Cycle at alpha = 0: 2 cos(2 pi k / n).
  for (int n : {5, 8, 13}) {
    std::vector<double> want;
    for (int k = 0; k < n; ++k) want.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(want.rbegin(), want.rend());
    const auto ev = alpha_eigenvalues(cycle(n), Alpha(0.0));
    for (int k = 0; k < n; ++k) CHECK(ev[k] == doctest::Approx(want[k]).epsilon(1e-12));
  }
  // K_n: rho = n - 1 for every alpha; the rest equal n alpha - 1.
  for (double a : {0.0, 0.25, 0.7}) {
    const auto ev = alpha_eigenvalues(complete(6), Alpha(a));
    CHECK(ev[0] == doctest::Approx(5.0));
    CHECK(ev[5] == doctest::Approx(6 * a - 1.0));
  }
  CHECK(alpha_spectral_radius(star(10), Alpha(0.0)) == doctest::Approx(3.0));
  CHECK(alpha_spectral_radius(path(2), Alpha(0.4)) == doctest::Approx(1.0));
}

TEST_CASE("alpha = 1 gives the degree sequence and no Perron vector") {
  const Graph g = star_plus_edge(7);
  const auto s = spectrum(g, Alpha(1.0));
  const auto p = structural_profile(g);
  for (int i = 0; i < g.order(); ++i) CHECK(s.eigenvalues[i] == doctest::Approx(p.degree_sequence[i]));
  CHECK_FALSE(s.perron.has_value());
  CHECK(alpha_spectral_radius(g, Alpha(1.0)) == 6.0);
}

TEST_CASE("Perron vector is positive, unit and an eigenvector") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(2 + i % 25, 0.2, rng);
    const double a = (i % 10) / 10.0;
    const auto s = spectrum(g, Alpha(a));
    REQUIRE(s.perron.has_value());
    double norm = 0.0;
    for (double x : *s.perron) {
      REQUIRE(x > 0.0);
      norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigen_residual(a_alpha_matrix(g, Alpha(a)), s.rho, *s.perron) < 1e-10);
  }
  CHECK_FALSE(spectrum(disjoint_union(path(3), path(2)), Alpha(0.5)).perron.has_value());
  CHECK_THROWS_AS(perron_vector(path(3), Alpha(1.0)), GraphError);
}

TEST_CASE("trace identities on random graphs") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(1 + i % 30, 0.3, rng);
    const double a = (i % 11) / 10.0;
    const auto ev = alpha_eigenvalues(g, Alpha(a));
    double t1 = 0.0, t2 = 0.0;
    for (double x : ev) {
      t1 += x;
      t2 += x * x;
    }
    const double m = g.size();
    const double z = static_cast<double>(structural_profile(g).zagreb());
    CHECK(std::abs(t1 - 2.0 * a * m) <= 1e-8);
    CHECK(std::abs(t2 - (2.0 * (1 - a) * (1 - a) * m + a * a * z)) <= 1e-8);
  }
}

TEST_CASE("rho is monotone under adding an edge to a connected graph") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(3 + i % 10, 0.2, rng);
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        edges.emplace_back(u, v);
        const Graph h(n, edges);
        const double a = (i % 10) / 10.0;
        REQUIRE(alpha_spectral_radius(h, Alpha(a)) > alpha_spectral_radius(g, Alpha(a)));
        u = n;
        break;
      }
    }
  }
}

TEST_CASE("alpha = 1/2 is half the signless Laplacian, and mu <= 2 rho_{1/2}") {
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t m = 0; m < (1u << pairs); ++m) {
      const Graph g = oracle::mask_graph(n, m);
      auto q = oracle::a_alpha_dense(g, 0.5L);
      for (auto& row : q) {
        for (auto& x : row) x *= 2.0L;
      }
      const auto roots = oracle::real_roots(oracle::characteristic_polynomial(q));
      CHECK(2.0 * alpha_spectral_radius(g, Alpha(0.5)) == doctest::Approx(static_cast<double>(roots[0])));
      CHECK(laplacian_largest(g) <= 2.0 * alpha_spectral_radius(g, Alpha(0.5)) + 1e-9);
    }
  }
}

TEST_CASE("Jacobi and tridiagonal QL agree on random symmetric matrices") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {1, 2, 7, 33, 60}) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m.set(i, j, u(rng));
    }
    const auto jac = jacobi_eigensystem(m, {1e-14, 100, false}).values;
    const auto ql = tridiagonal_ql_eigenvalues(m);
    REQUIRE(jac.size() == ql.size());
    for (int k = 0; k < n; ++k) CHECK(jac[k] == doctest::Approx(ql[k]).epsilon(1e-11));
  }
  // Large sparse matrices with zero diagonal blocks still converge.
  CHECK(alpha_spectral_radius(star(200), Alpha(0.0)) == doctest::Approx(std::sqrt(199.0)));
}

TEST_CASE("Jacobi eigenvectors are orthonormal") {
  const SymmetricMatrix m = a_alpha_matrix(star_plus_edge(8), Alpha(0.3));
  const auto es = jacobi_eigensystem(m);
  const int n = m.dim();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      double dot = 0.0;
      for (int r = 0; r < n; ++r) dot += es.vector_entry(r, a) * es.vector_entry(r, b);
      CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(jacobi_eigensystem(m, {1e-300, 1, true}), NumericError);
}

TEST_CASE("indices from the spectrum") {
  const auto k2 = indices(complete(2), Alpha(0.0));
  CHECK(k2.energy == doctest::Approx(2.0));
  CHECK(k2.estrada == doctest::Approx(std::exp(1.0) + std::exp(-1.0)));
  CHECK(k2.zagreb == 2);
  const auto c4 = indices(cycle(4), Alpha(0.5));
  // A_{1/2}(C_4) has eigenvalues 2, 1, 1, 0 and mean 2 alpha m / n = 1.
  CHECK(c4.energy == doctest::Approx(2.0));
  CHECK(indices(empty_graph(3), Alpha(0.2)).estrada == doctest::Approx(3.0));
}
