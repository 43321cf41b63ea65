#pragma once

#include "alphaspec/graph.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

/// Significant decimal digits carried by the extended-precision eigensolver.
inline constexpr int kPreciseDigits = 50;

/// rho_alpha(a) - rho_alpha(b) computed with kPreciseDigits-digit Jacobi
/// rotations, alpha taken as the exact binary value of the double. Used to
/// settle comparisons that double precision cannot resolve; its absolute
/// error is far below 1e-30 for the graph orders handled here.
double precise_radius_gap(const Graph& a, const Graph& b, Alpha alpha);

/// Extended-precision rho_alpha(g), rounded to double.
double precise_spectral_radius(const Graph& g, Alpha alpha);

}  // namespace alphaspec
