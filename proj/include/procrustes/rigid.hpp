#pragma once

#include "procrustes/core.hpp"
#include "procrustes/solver.hpp"

namespace procrustes {

/// Orientation-preserving rigid motion q -> U q + t with det(U) = +1.
template <typename Scalar>
struct RigidMotion {
  Mat<Scalar> rotation;
  Vec<Scalar> translation;
};

template <typename Scalar>
struct RigidFit {
  RigidMotion<Scalar> motion;
  Scalar delta;  // sum_i |motion(q_i) - p_i|^2 on the original sets
  RotationFit<Scalar> rotation_fit;  // the underlying centered rotation fit
};

using RigidMotiond = RigidMotion<double>;
using RigidFitd = RigidFit<double>;

template <typename Derived>
Vec<typename Derived::Scalar> centroid(const Eigen::MatrixBase<Derived>& a) {
  if (a.cols() < 1) throw std::invalid_argument("centroid: empty point set");
  return a.rowwise().mean();
}

/// Translates the set so its centroid lands at the origin.
template <typename Derived>
PointSet<typename Derived::Scalar> center(const Eigen::MatrixBase<Derived>& a) {
  return a.colwise() - centroid(a);
}

template <typename Scalar, typename Derived>
PointSet<Scalar> apply_rigid_motion(const RigidMotion<Scalar>& m,
                                    const Eigen::MatrixBase<Derived>& a) {
  if (m.rotation.rows() != m.rotation.cols() || m.rotation.rows() != a.rows() ||
      m.translation.size() != a.rows())
    throw std::invalid_argument("apply_rigid_motion: dimension mismatch");
  return (m.rotation * a.derived()).colwise() + m.translation;
}

/// sum_i |m(q_i) - p_i|^2.
template <typename Scalar, typename DerivedP, typename DerivedQ>
Scalar rigid_objective(const RigidMotion<Scalar>& m, const Eigen::MatrixBase<DerivedP>& p,
                       const Eigen::MatrixBase<DerivedQ>& q) {
  if (p.rows() != q.rows())
    throw std::invalid_argument("rigid_objective: point dimension mismatch");
  if (p.cols() != q.cols())
    throw std::invalid_argument("rigid_objective: point count mismatch");
  return (apply_rigid_motion(m, q) - p.derived()).squaredNorm();
}

/// Keeps the rotation but replaces the translation so the motion maps q_bar
/// exactly to p_bar. Doing so can only shrink the alignment objective.
template <typename Scalar, typename DerivedQ, typename DerivedP>
RigidMotion<Scalar> recenter_motion(const RigidMotion<Scalar>& m,
                                    const Eigen::MatrixBase<DerivedQ>& q_bar,
                                    const Eigen::MatrixBase<DerivedP>& p_bar) {
  if (q_bar.size() != m.rotation.cols() || p_bar.size() != m.rotation.rows())
    throw std::invalid_argument("recenter_motion: dimension mismatch");
  return RigidMotion<Scalar>{m.rotation, p_bar.derived() - m.rotation * q_bar.derived()};
}

/// Least-squares rigid alignment: fit the rotation on the centered sets and
/// carry the translation p_bar - U q_bar, which is optimal among all
/// orientation-preserving rigid motions. A single point pair yields the
/// identity rotation and the connecting translation.
template <typename DerivedP, typename DerivedQ>
RigidFit<typename DerivedP::Scalar> fit_rigid_motion(const Eigen::MatrixBase<DerivedP>& p,
                                                     const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.rows() != q.rows())
    throw std::invalid_argument("fit_rigid_motion: point dimension mismatch");
  if (p.cols() != q.cols())
    throw std::invalid_argument("fit_rigid_motion: point count mismatch");
  if (p.cols() < 1) throw std::invalid_argument("fit_rigid_motion: empty point sets");

  const Vec<Scalar> p_bar = centroid(p);
  const Vec<Scalar> q_bar = centroid(q);
  RotationFit<Scalar> rot = kabsch_umeyama(center(p), center(q));

  RigidFit<Scalar> fit;
  fit.motion = RigidMotion<Scalar>{rot.rotation, p_bar - rot.rotation * q_bar};
  fit.delta = rigid_objective(fit.motion, p, q);
  fit.rotation_fit = std::move(rot);
  return fit;
}

}  // namespace procrustes
