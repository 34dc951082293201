#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace procrustes {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// A set of n points in R^d is stored one point per column, so P and Q are
// d x n matrices and matrix expressions act on whole sets at once.
template <typename Scalar>
using PointSet = Mat<Scalar>;

using Matd = Mat<double>;
using Vecd = Vec<double>;
using PointSetd = PointSet<double>;

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  return a.trace();
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  return a.determinant();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius_distance: size mismatch");
  return (a.derived() - b.derived()).norm();
}

/// True iff |A^T A - I|_F <= tol.
template <typename Derived>
bool is_orthogonal(const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar tol) {
  using Scalar = typename Derived::Scalar;
  if (!(tol > Scalar(0)))
    throw std::invalid_argument("is_orthogonal: tol must be positive");
  const Eigen::Index d = a.cols();
  return (a.transpose() * a - Mat<Scalar>::Identity(d, d)).norm() <= tol;
}

}  // namespace procrustes
