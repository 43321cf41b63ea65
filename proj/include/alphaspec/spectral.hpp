#pragma once

#include <optional>
#include <span>
#include <vector>

#include "alphaspec/graph.hpp"
#include "alphaspec/matrix.hpp"

namespace alphaspec {

/// The mixing parameter of A_alpha = alpha*D + (1-alpha)*A, kept in [0, 1].
class Alpha {
 public:
  /// Throws GraphError outside [0, 1] or for NaN.
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  bool is_one() const noexcept { return value_ == 1.0; }
  /// Throws GraphError when alpha == 1; `op` names the caller in the message.
  void require_below_one(const char* op) const;

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

SymmetricMatrix a_alpha_matrix(const Graph& g, Alpha alpha);
SymmetricMatrix laplacian_matrix(const Graph& g);

struct SpectralSummary {
  Alpha alpha{0.0};
  std::vector<double> eigenvalues;  // non-increasing
  double rho = 0.0;
  double least = 0.0;
  /// Positive unit Perron vector; present iff g is connected and alpha < 1.
  std::optional<std::vector<double>> perron;
};

SpectralSummary spectrum(const Graph& g, Alpha alpha);

/// Eigenvalues only, non-increasing.
std::vector<double> alpha_eigenvalues(const Graph& g, Alpha alpha);

/// Largest eigenvalue, taken as the max over components.
double alpha_spectral_radius(const Graph& g, Alpha alpha);

/// Perron vector of a connected graph for alpha < 1. Throws GraphError
/// otherwise.
std::vector<double> perron_vector(const Graph& g, Alpha alpha);

struct IndexValues {
  double energy = 0.0;
  double estrada = 0.0;
  long long zagreb = 0;
};

IndexValues indices(const Graph& g, Alpha alpha);
/// Same quantities from an already computed spectrum.
IndexValues indices_from_spectrum(const Graph& g, Alpha alpha, std::span<const double> eigenvalues);

double laplacian_largest(const Graph& g);

/// max_i |(M x - lambda x)_i|.
double eigen_residual(const SymmetricMatrix& m, double lambda, std::span<const double> x);

}  // namespace alphaspec
