#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "alphaspec/errors.hpp"

namespace alphaspec {

/// Dense symmetric matrix, both triangles stored row-major.
template <class T>
class BasicSymmetricMatrix {
 public:
  BasicSymmetricMatrix() = default;
  explicit BasicSymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}

  int dim() const noexcept { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Sets (i, j) and (j, i).
  void set(int i, int j, T v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }

  T frobenius_norm() const {
    using std::sqrt;
    T s(0);
    for (const T& x : a_) s += x * x;
    return sqrt(s);
  }

  T off_diagonal_norm() const {
    using std::sqrt;
    T s(0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j) s += (*this)(i, j) * (*this)(i, j);
      }
    }
    return sqrt(s);
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

using SymmetricMatrix = BasicSymmetricMatrix<double>;

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is <= tolerance * ||A||_F.
  double tolerance = 1e-12;
  int max_sweeps = 60;
  bool want_vectors = true;
};

template <class T>
struct BasicEigenSystem {
  std::vector<T> values;   // non-increasing
  std::vector<T> vectors;  // n x n row-major; column k pairs with values[k]
  int sweeps = 0;

  T vector_entry(int row, int k) const {
    const int n = static_cast<int>(values.size());
    return vectors[static_cast<std::size_t>(row) * n + k];
  }
};

using EigenSystem = BasicEigenSystem<double>;

/// Cyclic Jacobi rotations. Throws NumericError when max_sweeps is reached.
template <class T>
BasicEigenSystem<T> jacobi_eigensystem(BasicSymmetricMatrix<T> a, const JacobiOptions& opt = {}) {
  using std::abs;
  using std::sqrt;
  const int n = a.dim();
  std::vector<T> v;
  if (opt.want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, T(0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = T(1);
  }
  const T threshold = T(opt.tolerance) * a.frobenius_norm();
  int sweep = 0;
  for (;; ++sweep) {
    if (a.off_diagonal_norm() <= threshold) break;
    if (sweep == opt.max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge", sweep,
                         static_cast<double>(a.off_diagonal_norm()));
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        if (apq == T(0)) continue;
        const T theta = (a(q, q) - a(p, p)) / (T(2) * apq);
        T t;
        if (abs(theta) > T(1e150)) {
          t = T(1) / (T(2) * theta);
        } else {
          t = T(1) / (abs(theta) + sqrt(theta * theta + T(1)));
          if (theta < T(0)) t = -t;
        }
        const T c = T(1) / sqrt(t * t + T(1));
        const T s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const T akp = a(k, p);
          const T akq = a(k, q);
          a.set(k, p, c * akp - s * akq);
          a.set(k, q, s * akp + c * akq);
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a.set(p, q, T(0));
        if (opt.want_vectors) {
          for (int k = 0; k < n; ++k) {
            T& vkp = v[static_cast<std::size_t>(k) * n + p];
            T& vkq = v[static_cast<std::size_t>(k) * n + q];
            const T x = vkp, y = vkq;
            vkp = c * x - s * y;
            vkq = s * x + c * y;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

  BasicEigenSystem<T> out;
  out.sweeps = sweep;
  out.values.resize(n);
  for (int k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (opt.want_vectors) {
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
      for (int k = 0; k < n; ++k) {
        out.vectors[static_cast<std::size_t>(row) * n + k] =
            v[static_cast<std::size_t>(row) * n + order[k]];
      }
    }
  }
  return out;
}

/// Eigenvalues (non-increasing) by Householder reduction to tridiagonal form
/// followed by implicit QL. Used for large orders where Jacobi's O(n^3) per
/// sweep dominates.
std::vector<double> tridiagonal_ql_eigenvalues(SymmetricMatrix a);

/// Eigenvalues, non-increasing: Jacobi up to kJacobiMaxOrder, tridiagonal QL above.
inline constexpr int kJacobiMaxOrder = 32;
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& a);

}  // namespace alphaspec
