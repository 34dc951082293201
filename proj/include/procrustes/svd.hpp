#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "procrustes/core.hpp"

namespace procrustes {

/// Thrown when the Jacobi sweep cap is exhausted. Only pathological input
/// (e.g. NaN entries) gets anywhere near the cap for small orders.
struct SvdConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct SvdResult {
  Mat<Scalar> v;      // left orthogonal factor
  Vec<Scalar> sigma;  // singular values, descending and nonnegative
  Mat<Scalar> w;      // right orthogonal factor

  Mat<Scalar> reconstruct() const { return v * sigma.asDiagonal() * w.transpose(); }
};

using SvdResultd = SvdResult<double>;

namespace detail {

// Fill column k of v with a unit vector orthogonal to columns 0..k-1, chosen
// as the orthogonalized standard basis vector with the largest remainder so
// the completion is deterministic.
template <typename Scalar>
void complete_orthonormal_column(Mat<Scalar>& v, Eigen::Index k) {
  const Eigen::Index d = v.rows();
  Vec<Scalar> best;
  Scalar best_norm = Scalar(-1);
  for (Eigen::Index cand = 0; cand < d; ++cand) {
    Vec<Scalar> x = Vec<Scalar>::Unit(d, cand);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < k; ++j) x -= v.col(j).dot(x) * v.col(j);
    const Scalar n = x.norm();
    if (n > best_norm) {
      best_norm = n;
      best = x;
    }
  }
  v.col(k) = best / best_norm;
}

}  // namespace detail

/// Singular value decomposition M = V diag(sigma) W^T for square M of small
/// order, computed with one-sided Jacobi rotations: columns of a working copy
/// are orthogonalized pairwise by right rotations until every pair satisfies
/// |<c_i, c_j>| <= 1e-14 |c_i| |c_j|, capped at 60 sweeps. Column norms then
/// give the singular values, normalized columns give V, and the accumulated
/// rotations give W. Columns whose norm vanishes (rank-deficient or zero
/// input) are completed by Gram-Schmidt so V is always fully orthogonal.
/// Convergence constants assume double-or-wider scalars.
template <typename Derived>
SvdResult<typename Derived::Scalar> jacobi_svd(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("jacobi_svd: matrix must be square");
  const Eigen::Index d = m.rows();
  if (d < 1)
    throw std::invalid_argument("jacobi_svd: order must be at least 1");

  Mat<Scalar> a = m;
  Mat<Scalar> w = Mat<Scalar>::Identity(d, d);

  const Scalar rel_tol = Scalar(1e-14);
  const int max_sweeps = 60;

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index p = 0; p + 1 < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const Scalar app = a.col(p).squaredNorm();
        const Scalar aqq = a.col(q).squaredNorm();
        const Scalar apq = a.col(p).dot(a.col(q));
        if (std::abs(apq) <= rel_tol * std::sqrt(app) * std::sqrt(aqq)) continue;
        converged = false;

        const Scalar tau = (aqq - app) / (2 * apq);
        const Scalar t =
            (tau >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const Scalar c = 1 / std::sqrt(1 + t * t);
        const Scalar s = c * t;

        const Vec<Scalar> ap = a.col(p);
        a.col(p) = c * ap - s * a.col(q);
        a.col(q) = s * ap + c * a.col(q);
        const Vec<Scalar> wp = w.col(p);
        w.col(p) = c * wp - s * w.col(q);
        w.col(q) = s * wp + c * w.col(q);
      }
    }
  }
  if (!converged)
    throw SvdConvergenceError("jacobi_svd: column orthogonalization did not converge in 60 sweeps");

  Vec<Scalar> norms(d);
  for (Eigen::Index i = 0; i < d; ++i) norms[i] = a.col(i).norm();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return norms[i] > norms[j]; });

  SvdResult<Scalar> out;
  out.v = Mat<Scalar>(d, d);
  out.w = Mat<Scalar>(d, d);
  out.sigma = Vec<Scalar>(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.sigma[k] = norms[order[k]];
    out.w.col(k) = w.col(order[k]);
  }

  // Norms at or below roundoff of the leading singular value carry no usable
  // direction; their left columns are rebuilt by completion instead.
  const Scalar drop_tol = out.sigma[0] * Scalar(1e-13);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (out.sigma[k] > drop_tol)
      out.v.col(k) = a.col(order[k]) / out.sigma[k];
    else
      detail::complete_orthonormal_column(out.v, k);
  }
  return out;
}

}  // namespace procrustes
