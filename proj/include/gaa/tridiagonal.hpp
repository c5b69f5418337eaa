#pragma once

#include "gaa/types.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace gaa {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct TridiagonalEigen {
  VectorX<Scalar> eigenvalues;   // ascending
  MatrixX<Scalar> eigenvectors;  // column j pairs with eigenvalues[j]
};

/// Full eigensystem of the real symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `offdiag` (size n − 1), by QL iteration with
/// implicit Wilkinson shifts. Throws ConvergenceError with the index of the
/// eigenvalue that failed to converge within `max_iterations` sweeps.
template <typename Scalar>
TridiagonalEigen<Scalar> symmetric_tridiagonal_eigen(const VectorX<Scalar>& diag,
                                                     const VectorX<Scalar>& offdiag,
                                                     int max_iterations = 60) {
  using std::abs;
  using std::hypot;
  const Eigen::Index n = diag.size();
  if (n == 0) throw InvalidArgument("tridiagonal matrix must have at least one row");
  if (offdiag.size() != n - 1)
    throw InvalidArgument("off-diagonal must have exactly n - 1 entries");

  VectorX<Scalar> d = diag;
  VectorX<Scalar> e = VectorX<Scalar>::Zero(n);
  e.head(n - 1) = offdiag;
  MatrixX<Scalar> z = MatrixX<Scalar>::Identity(n, n);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  for (Eigen::Index l = 0; l < n; ++l) {
    int iter = 0;
    Eigen::Index m;
    do {
      for (m = l; m < n - 1; ++m) {
        const Scalar dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_iterations)
        throw ConvergenceError("tridiagonal QL iteration did not converge",
                               static_cast<std::size_t>(l));

      Scalar g = (d[l + 1] - d[l]) / (Scalar(2) * e[l]);
      Scalar r = hypot(g, Scalar(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      Scalar s = 1, c = 1, p = 0;
      Eigen::Index i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        Scalar f = s * e[i];
        const Scalar b = c * e[i];
        r = hypot(f, g);
        e[i + 1] = r;
        if (r == Scalar(0)) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + Scalar(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (Eigen::Index k = 0; k < n; ++k) {
          f = z(k, i + 1);
          z(k, i + 1) = s * z(k, i) + c * f;
          z(k, i) = c * z(k, i) - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });

  TridiagonalEigen<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    out.eigenvectors.col(j) = z.col(order[j]);
  }
  return out;
}

}  // namespace gaa
