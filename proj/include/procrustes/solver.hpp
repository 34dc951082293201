#pragma once

#include "procrustes/core.hpp"
#include "procrustes/svd.hpp"

namespace procrustes {

/// Which branch of the determinant correction the solver took: positive when
/// det(V) det(W) >= 0, negative when the unconstrained optimum would be a
/// reflection and the last singular direction had to be flipped.
enum class DetBranch { positive, negative };

template <typename Scalar>
struct RotationFit {
  Mat<Scalar> rotation;    // the fitted rotation U, det(U) = +1
  Scalar trace_value;      // tr(U M), the achieved alignment objective
  Scalar residual;         // sum_i |U q_i - p_i|^2, summed directly
  Vec<Scalar> sigma;       // singular values of the cross-covariance
  DetBranch det_branch;
};

using RotationFitd = RotationFit<double>;

/// M = Q P^T = sum_i q_i p_i^T for point sets stored one point per column.
template <typename DerivedP, typename DerivedQ>
Mat<typename DerivedP::Scalar> cross_covariance(const Eigen::MatrixBase<DerivedP>& p,
                                                const Eigen::MatrixBase<DerivedQ>& q) {
  if (p.rows() != q.rows())
    throw std::invalid_argument("cross_covariance: point dimension mismatch");
  if (p.cols() != q.cols())
    throw std::invalid_argument("cross_covariance: point count mismatch");
  return q.derived() * p.derived().transpose();
}

/// tr(U M), the quantity a rotation fit maximizes.
template <typename DerivedU, typename DerivedM>
typename DerivedU::Scalar trace_objective(const Eigen::MatrixBase<DerivedU>& u,
                                          const Eigen::MatrixBase<DerivedM>& m) {
  if (u.rows() != u.cols() || m.rows() != m.cols() || u.rows() != m.rows())
    throw std::invalid_argument("trace_objective: order mismatch");
  return (u.derived() * m.derived()).trace();
}

/// sum_i |U q_i - p_i|^2, summed directly rather than through the trace
/// expansion, so the expansion stays available as an independent cross-check.
template <typename DerivedU, typename DerivedP, typename DerivedQ>
typename DerivedU::Scalar procrustes_objective(const Eigen::MatrixBase<DerivedU>& u,
                                               const Eigen::MatrixBase<DerivedP>& p,
                                               const Eigen::MatrixBase<DerivedQ>& q) {
  if (u.rows() != u.cols() || u.cols() != q.rows() || p.rows() != q.rows())
    throw std::invalid_argument("procrustes_objective: dimension mismatch");
  if (p.cols() != q.cols())
    throw std::invalid_argument("procrustes_objective: point count mismatch");
  return (u.derived() * q.derived() - p.derived()).squaredNorm();
}

/// The largest trace any rotation can achieve against a matrix with the given
/// singular values: sum sigma_j on the positive branch, and
/// sum_{j<d} sigma_j - sigma_d when the determinant correction kicks in.
template <typename Derived>
typename Derived::Scalar trace_upper_bound(const Eigen::MatrixBase<Derived>& sigma,
                                           DetBranch branch) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = sigma.size();
  if (d < 1) throw std::invalid_argument("trace_upper_bound: empty singular value list");
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!(sigma[i] >= Scalar(0)))
      throw std::invalid_argument("trace_upper_bound: singular values must be nonnegative");
    if (i + 1 < d && sigma[i] < sigma[i + 1])
      throw std::invalid_argument("trace_upper_bound: singular values must descend");
  }
  Scalar total = sigma.sum();
  if (branch == DetBranch::negative) total -= 2 * sigma[d - 1];
  return total;
}

/// Kabsch-Umeyama fit of the rotation minimizing sum_i |U q_i - p_i|^2:
/// decompose M = Q P^T as V diag(sigma) W^T and return
/// U = W diag(1,...,1,s) V^T with s = -1 exactly when det(V) det(W) < 0,
/// which forces det(U) = +1 even for mirror-image input. Rank-deficient and
/// empty inputs are legal; ties in the singular values make the maximizer
/// non-unique, and the fit returns whichever one the computed SVD induces.
template <typename DerivedP, typename DerivedQ>
RotationFit<typename DerivedP::Scalar> kabsch_umeyama(const Eigen::MatrixBase<DerivedP>& p,
                                                      const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.rows() < 1)
    throw std::invalid_argument("kabsch_umeyama: point dimension must be at least 1");
  const Mat<Scalar> m = cross_covariance(p, q);
  const SvdResult<Scalar> svd = jacobi_svd(m);

  const Scalar det_vw = determinant(svd.v) * determinant(svd.w);
  const DetBranch branch = det_vw >= Scalar(0) ? DetBranch::positive : DetBranch::negative;

  Mat<Scalar> w_fixed = svd.w;
  if (branch == DetBranch::negative) w_fixed.col(m.cols() - 1) *= Scalar(-1);

  RotationFit<Scalar> fit;
  fit.rotation = w_fixed * svd.v.transpose();
  fit.trace_value = trace_objective(fit.rotation, m);
  fit.residual = procrustes_objective(fit.rotation, p, q);
  fit.sigma = svd.sigma;
  fit.det_branch = branch;
  return fit;
}

}  // namespace procrustes
