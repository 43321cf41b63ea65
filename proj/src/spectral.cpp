#include "alphaspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "alphaspec/errors.hpp"

namespace alphaspec {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw GraphError("alpha must lie in [0, 1], got " + std::to_string(value));
  }
}

void Alpha::require_below_one(const char* op) const {
  if (is_one()) throw GraphError(std::string(op) + " requires alpha < 1");
}

SymmetricMatrix a_alpha_matrix(const Graph& g, Alpha alpha) {
  const double a = alpha.value();
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = a * g.degree(v);
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0 - a);
  return m;
}

SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

namespace {

std::vector<double> sorted_degrees(const Graph& g) {
  std::vector<double> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Solves (m - sigma I) y = b by Gaussian elimination with partial pivoting.
std::vector<double> shifted_solve(const SymmetricMatrix& m, double sigma, std::vector<double> b) {
  const int n = m.dim();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j) - (i == j ? sigma : 0.0);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == 0.0) a[pivot * n + col] = 1e-300;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
      b[r] -= f * b[col];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i * n + j] * b[j];
    b[i] = s / a[i * n + i];
  }
  return b;
}

void normalize(std::vector<double>& x) {
  const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  const double scale = (sum < 0.0 ? -1.0 : 1.0) / norm;
  for (double& v : x) v *= scale;
}

std::vector<double> refine_perron(const SymmetricMatrix& m, double lambda, std::vector<double> x) {
  normalize(x);
  const double shift = lambda + 1e-9 * std::max(1.0, std::abs(lambda));
  for (int it = 0; it < 2; ++it) {
    x = shifted_solve(m, shift, std::move(x));
    normalize(x);
  }
  return x;
}

}  // namespace

SpectralSummary spectrum(const Graph& g, Alpha alpha) {
  SpectralSummary out;
  out.alpha = alpha;
  if (alpha.is_one()) {
    out.eigenvalues = sorted_degrees(g);
  } else {
    const SymmetricMatrix m = a_alpha_matrix(g, alpha);
    if (is_connected(g)) {
      EigenSystem es = jacobi_eigensystem(m);
      std::vector<double> x(g.order());
      for (int i = 0; i < g.order(); ++i) x[i] = es.vector_entry(i, 0);
      x = g.order() == 1 ? std::vector<double>{1.0} : refine_perron(m, es.values[0], std::move(x));
      if (*std::min_element(x.begin(), x.end()) <= 0.0) {
        throw NumericError("Perron vector has a non-positive entry", 2, eigen_residual(m, es.values[0], x));
      }
      out.eigenvalues = std::move(es.values);
      out.perron = std::move(x);
    } else {
      out.eigenvalues = symmetric_eigenvalues(m);
    }
  }
  out.rho = out.eigenvalues.front();
  out.least = out.eigenvalues.back();
  return out;
}

std::vector<double> alpha_eigenvalues(const Graph& g, Alpha alpha) {
  if (alpha.is_one()) return sorted_degrees(g);
  return symmetric_eigenvalues(a_alpha_matrix(g, alpha));
}

double alpha_spectral_radius(const Graph& g, Alpha alpha) {
  if (alpha.is_one()) return max_degree(g);
  return alpha_eigenvalues(g, alpha).front();
}

std::vector<double> perron_vector(const Graph& g, Alpha alpha) {
  alpha.require_below_one("perron_vector");
  if (!is_connected(g)) throw GraphError("perron_vector requires a connected graph");
  return *spectrum(g, alpha).perron;
}

IndexValues indices_from_spectrum(const Graph& g, Alpha alpha, std::span<const double> eigenvalues) {
  IndexValues out;
  const double mean = 2.0 * alpha.value() * g.size() / g.order();
  for (double l : eigenvalues) {
    out.energy += std::abs(l - mean);
    out.estrada += std::exp(l);
  }
  for (Vertex v = 0; v < g.order(); ++v) out.zagreb += static_cast<long long>(g.degree(v)) * g.degree(v);
  return out;
}

IndexValues indices(const Graph& g, Alpha alpha) {
  const auto ev = alpha_eigenvalues(g, alpha);
  return indices_from_spectrum(g, alpha, ev);
}

double laplacian_largest(const Graph& g) {
  return symmetric_eigenvalues(laplacian_matrix(g)).front();
}

double eigen_residual(const SymmetricMatrix& m, double lambda, std::span<const double> x) {
  double worst = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    double s = -lambda * x[i];
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * x[j];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace alphaspec
