#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "procrustes/core.hpp"
#include "procrustes/rigid.hpp"

// Ground-truth machinery used to verify the solvers without trusting them:
// a closed-form planar maximizer, reproducible rotation/orthogonal samplers,
// trace-bound checkers, and the fixed vector every reflection flips. Sampling
// runs on an explicit 64-bit generator so streams replay exactly from a seed.
namespace procrustes::oracle {

using RngSeed = std::uint64_t;

/// splitmix64: advance by the golden-ratio increment, then mix. Uniform
/// doubles take the top 53 bits; normals come from Box-Muller on two uniforms.
class SplitMix64 {
 public:
  explicit SplitMix64(RngSeed seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  double next_normal() {
    const double u1 = 1.0 - next_uniform();  // (0, 1], keeps the log finite
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

inline Matd rotation_2d(double theta) {
  Matd r(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  r << c, -s, s, c;
  return r;
}

struct OptimalAngle2d {
  double theta;
  double value;
};

/// Closed-form maximizer of tr(U(theta) M) over planar rotations. Writing the
/// trace as cos(theta) (M00 + M11) + sin(theta) (M01 - M10), the maximum is
/// the hypotenuse of the two coefficients, attained at their atan2 angle.
/// When both coefficients vanish every angle ties and (0, 0) is returned.
inline OptimalAngle2d optimal_angle_2d(const Matd& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("optimal_angle_2d: matrix must be 2x2");
  const double a = m(0, 0) + m(1, 1);
  const double b = m(0, 1) - m(1, 0);
  if (a == 0.0 && b == 0.0) return {0.0, 0.0};
  return {std::atan2(b, a), std::hypot(a, b)};
}

/// Orthonormalizes a matrix of independent standard normals (modified
/// Gram-Schmidt, two passes) and flips the last column if the determinant
/// came out negative. Consumes the stream deterministically.
inline Matd random_rotation(int dim, SplitMix64& rng) {
  if (dim < 1) throw std::invalid_argument("random_rotation: dimension must be at least 1");
  Matd g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = rng.next_normal();

  Matd q(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Vecd x = g.col(j);
    while (true) {
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index i = 0; i < j; ++i) x -= q.col(i).dot(x) * q.col(i);
      const double n = x.norm();
      if (n > 1e-8) {
        q.col(j) = x / n;
        break;
      }
      // Dependent draw (vanishing odds); replace the column and retry.
      for (Eigen::Index i = 0; i < dim; ++i) x[i] = rng.next_normal();
    }
  }
  if (q.determinant() < 0) q.col(dim - 1) *= -1.0;
  return q;
}

inline Matd random_rotation(int dim, RngSeed seed) {
  SplitMix64 rng(seed);
  return random_rotation(dim, rng);
}

/// Random orthogonal matrix with the requested determinant sign; the +1 case
/// is exactly the random_rotation construction.
inline Matd random_orthogonal(int dim, int det_sign, SplitMix64& rng) {
  if (det_sign != 1 && det_sign != -1)
    throw std::invalid_argument("random_orthogonal: det_sign must be +1 or -1");
  Matd q = random_rotation(dim, rng);
  if (det_sign == -1) q.col(dim - 1) *= -1.0;
  return q;
}

inline Matd random_orthogonal(int dim, int det_sign, RngSeed seed) {
  SplitMix64 rng(seed);
  return random_orthogonal(dim, det_sign, rng);
}

/// Every orthogonal W with det(W) < 0 flips some unit vector: W x = -x and
/// W^T x = -x. The vector is a null direction of W + I, extracted by row
/// elimination with partial pivoting and back-substitution from the smallest
/// pivot. Coordinates below 1e-12 count as zero for the sign convention
/// (first nonzero coordinate positive).
inline Vecd reflection_fixed_vector(const Matd& w) {
  if (w.rows() != w.cols())
    throw std::invalid_argument("reflection_fixed_vector: matrix must be square");
  if (!is_orthogonal(w, 1e-8))
    throw std::invalid_argument("reflection_fixed_vector: matrix must be orthogonal");
  if (!(determinant(w) < 0))
    throw std::invalid_argument("reflection_fixed_vector: determinant must be negative");

  const Eigen::Index d = w.rows();
  Matd u = w + Matd::Identity(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::Index piv = k;
    for (Eigen::Index i = k + 1; i < d; ++i)
      if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
    if (piv != k) u.row(k).swap(u.row(piv));
    if (u(k, k) == 0.0) continue;
    for (Eigen::Index i = k + 1; i < d; ++i) {
      const double f = u(i, k) / u(k, k);
      u.row(i).tail(d - k) -= f * u.row(k).tail(d - k);
    }
  }

  Eigen::Index m = 0;
  for (Eigen::Index k = 1; k < d; ++k)
    if (std::abs(u(k, k)) < std::abs(u(m, m))) m = k;

  Vecd x = Vecd::Zero(d);
  x[m] = 1.0;
  for (Eigen::Index k = m - 1; k >= 0; --k) {
    double s = 0.0;
    for (Eigen::Index j = k + 1; j <= m; ++j) s += u(k, j) * x[j];
    x[k] = -s / u(k, k);
  }

  x /= x.norm();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(x[i]) > 1e-12) {
      if (x[i] < 0) x = -x;
      break;
    }
  }
  return x;
}

/// Trace bounds that hold for any orthogonal W and nonnegative descending
/// diagonal D: tr(WD) never exceeds the diagonal sum, conjugating D by an
/// orthogonal B changes nothing, and a reflecting W additionally loses twice
/// the smallest diagonal entry. Slacks (bound - value) are reported so a
/// harness can prove it would notice a violated bound.
struct TraceBoundReport {
  bool diagonal_holds = false;
  bool conjugated_holds = false;
  bool reflection_holds = false;
  bool reflection_applicable = false;
  double diagonal_slack = 0.0;
  double conjugated_slack = 0.0;
  double reflection_slack = 0.0;

  bool all_hold() const { return diagonal_holds && conjugated_holds && reflection_holds; }
};

inline TraceBoundReport check_trace_bounds(const Matd& w, const Vecd& d_diag, const Matd& b) {
  const Eigen::Index d = d_diag.size();
  if (d < 1) throw std::invalid_argument("check_trace_bounds: empty diagonal");
  if (w.rows() != d || w.cols() != d || b.rows() != d || b.cols() != d)
    throw std::invalid_argument("check_trace_bounds: order mismatch");
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!(d_diag[i] >= 0.0))
      throw std::invalid_argument("check_trace_bounds: diagonal must be nonnegative");
    if (i + 1 < d && d_diag[i] < d_diag[i + 1])
      throw std::invalid_argument("check_trace_bounds: diagonal must descend");
  }
  if (!is_orthogonal(w, 1e-8) || !is_orthogonal(b, 1e-8))
    throw std::invalid_argument("check_trace_bounds: W and B must be orthogonal");

  const double sum_sigma = d_diag.sum();
  const double tol = 1e-9 * (1.0 + sum_sigma);

  const double tr_wd = (w * d_diag.asDiagonal()).trace();
  const Matd s = b.transpose() * d_diag.asDiagonal() * b;
  const double tr_ws = (w * s).trace();

  TraceBoundReport r;
  r.diagonal_slack = sum_sigma - tr_wd;
  r.diagonal_holds = r.diagonal_slack >= -tol;
  r.conjugated_slack = s.trace() - tr_ws;
  r.conjugated_holds = r.conjugated_slack >= -tol;
  r.reflection_applicable = determinant(w) < 0;
  if (r.reflection_applicable) {
    r.reflection_slack = sum_sigma - 2.0 * d_diag[d - 1] - tr_wd;
    r.reflection_holds = r.reflection_slack >= -tol;
  } else {
    r.reflection_holds = true;
  }
  return r;
}

/// Reproducible stream of rigid motions: random rotation, translation uniform
/// in [-box_scale, box_scale]^d. Single-consumer; distinct streams are
/// independent.
class RigidMotionSampler {
 public:
  RigidMotionSampler(int dim, double box_scale, RngSeed seed)
      : dim_(dim), box_(box_scale), rng_(seed) {
    if (dim < 1) throw std::invalid_argument("RigidMotionSampler: dimension must be at least 1");
    if (!(box_scale > 0))
      throw std::invalid_argument("RigidMotionSampler: box_scale must be positive");
  }

  RigidMotiond next() {
    RigidMotiond m;
    m.rotation = random_rotation(dim_, rng_);
    m.translation = Vecd(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) m.translation[i] = rng_.next_uniform(-box_, box_);
    return m;
  }

 private:
  int dim_;
  double box_;
  SplitMix64 rng_;
};

inline std::vector<RigidMotiond> sample_rigid_motions(int dim, int count, double box_scale,
                                                      RngSeed seed) {
  if (count < 1) throw std::invalid_argument("sample_rigid_motions: count must be at least 1");
  RigidMotionSampler sampler(dim, box_scale, seed);
  std::vector<RigidMotiond> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace procrustes::oracle
