#pragma once

#include "procrustes/core.hpp"
#include "procrustes/oracle.hpp"
#include "procrustes/rigid.hpp"

namespace procrustes::cli {

struct SyntheticInstance {
  PointSetd q;         // source points, uniform in [-1, 1]^d
  PointSetd p;         // truth(q) plus isotropic Gaussian noise
  RigidMotiond truth;  // the motion that produced p
};

/// Reproducible test instance from a single seed. One splitmix64 stream
/// drives everything, in order: truth rotation, truth translation (uniform in
/// [-1, 1]^d), the q points, then the noise normals.
SyntheticInstance generate_instance(int dim, Eigen::Index count, double noise_sigma,
                                    oracle::RngSeed seed);

}  // namespace procrustes::cli
