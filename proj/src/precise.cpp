#include "alphaspec/precise.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "alphaspec/matrix.hpp"

namespace alphaspec {

namespace {

using Wide = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<kPreciseDigits>, boost::multiprecision::et_off>;

Wide wide_radius(const Graph& g, Alpha alpha) {
  const Wide a(alpha.value());
  if (alpha.is_one()) return Wide(max_degree(g));
  BasicSymmetricMatrix<Wide> m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = a * g.degree(v);
  for (auto [u, v] : g.edges()) m.set(u, v, Wide(1) - a);
  JacobiOptions opt;
  opt.want_vectors = false;
  opt.tolerance = 1e-40;
  opt.max_sweeps = 100;
  return jacobi_eigensystem(m, opt).values.front();
}

}  // namespace

double precise_radius_gap(const Graph& a, const Graph& b, Alpha alpha) {
  return static_cast<double>(wide_radius(a, alpha) - wide_radius(b, alpha));
}

double precise_spectral_radius(const Graph& g, Alpha alpha) {
  return static_cast<double>(wide_radius(g, alpha));
}

}  // namespace alphaspec
